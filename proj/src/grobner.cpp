#include "toric/grobner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace toric {

namespace {

Exponents lcm_exponents(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = a[i] < b[i] ? b[i] : a[i];
    return l;
}

bool supports_intersect(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return true;
    return false;
}

// m -> m - lead + trail
void rewrite(Exponents& m, const OrientedBinomial& g) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.trail[i] - g.lead[i];
}

bool element_less(const OrientedBinomial& a, const OrientedBinomial& b,
                  const TermOrder& ord) {
    Cmp c = compare(a.lead, b.lead, ord);
    if (c != Cmp::equal) return c == Cmp::less;
    return compare(a.trail, b.trail, ord) == Cmp::less;
}

void sort_elements(GrobnerBasis& basis) {
    std::sort(basis.elements.begin(), basis.elements.end(),
              [&](const OrientedBinomial& a, const OrientedBinomial& b) {
                  return element_less(a, b, basis.order);
              });
}

} // namespace

OrientedBinomial orient(const Binomial& b, const TermOrder& ord) {
    switch (compare(b.plus, b.minus, ord)) {
    case Cmp::greater: return {b.plus, b.minus};
    case Cmp::less: return {b.minus, b.plus};
    default:
        fail(errc::not_a_term_order, "order cannot orient a nonzero binomial");
    }
}

std::optional<OrientedBinomial> reduce_pair(Exponents m1, Exponents m2,
                                            const std::vector<OrientedBinomial>& basis,
                                            const TermOrder& ord) {
    while (true) {
        if (m1 == m2) return std::nullopt;
        if (compare(m1, m2, ord) == Cmp::less) std::swap(m1, m2);
        bool rewritten = false;
        for (const OrientedBinomial& g : basis) {
            if (divides(g.lead, m1)) {
                rewrite(m1, g);
                rewritten = true;
                break;
            }
        }
        if (rewritten) continue;
        for (const OrientedBinomial& g : basis) {
            if (divides(g.lead, m2)) {
                rewrite(m2, g);
                rewritten = true;
                break;
            }
        }
        if (!rewritten) return OrientedBinomial{std::move(m1), std::move(m2)};
    }
}

std::optional<OrientedBinomial> reduce(const Binomial& f, const GrobnerBasis& basis) {
    return reduce_pair(f.plus, f.minus, basis.elements, basis.order);
}

std::optional<OrientedBinomial> s_binomial(const OrientedBinomial& f,
                                           const OrientedBinomial& g,
                                           const TermOrder& ord) {
    Exponents l = lcm_exponents(f.lead, g.lead);
    Exponents a = vec_add(vec_sub(l, f.lead), f.trail);
    Exponents b = vec_add(vec_sub(l, g.lead), g.trail);
    if (a == b) return std::nullopt;
    if (compare(a, b, ord) == Cmp::less) std::swap(a, b);
    return OrientedBinomial{std::move(a), std::move(b)};
}

GrobnerBasis buchberger(const std::vector<Binomial>& gens, TermOrder ord,
                        const EngineOptions& opts) {
    GrobnerBasis gb;
    gb.order = std::move(ord);
    auto& g = gb.elements;
    for (const Binomial& b : gens) g.push_back(orient(b, gb.order));

    using PairKey = std::tuple<Int, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Int deg = dot(gb.order.rows[0], lcm_exponents(g[i].lead, g[j].lead));
        queue.emplace(std::move(deg), i, j);
    };
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    auto chain_skip = [&](std::size_t i, std::size_t j) {
        // safe variant: only pairs that actually went through S-reduction
        // may justify skipping
        Exponents l = lcm_exponents(g[i].lead, g[j].lead);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == i || k == j || !divides(g[k].lead, l)) continue;
            auto sub = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (processed.count(sub(i, k)) && processed.count(sub(j, k)))
                return true;
        }
        return false;
    };

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        if (!supports_intersect(g[i].lead, g[j].lead)) continue;
        if (opts.chain_criterion && chain_skip(i, j)) continue;
        processed.insert({i, j});
        auto s = s_binomial(g[i], g[j], gb.order);
        if (!s) continue;
        auto h = reduce_pair(std::move(s->lead), std::move(s->trail), g, gb.order);
        if (!h) continue;
        g.push_back(std::move(*h));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) push_pair(k, g.size() - 1);
    }
    sort_elements(gb);
    return gb;
}

GrobnerBasis reduce_gb(GrobnerBasis basis) {
    sort_elements(basis);
    std::vector<OrientedBinomial> kept;
    for (OrientedBinomial& e : basis.elements) {
        bool dominated = false;
        for (const OrientedBinomial& k : kept)
            if (divides(k.lead, e.lead)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(e));
    }
    // Tail reduction; normal forms are unique w.r.t. the minimal lead set,
    // so updating in place is safe.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        bool rewritten = true;
        while (rewritten) {
            rewritten = false;
            for (const OrientedBinomial& k : kept)
                if (divides(k.lead, kept[i].trail)) {
                    rewrite(kept[i].trail, k);
                    rewritten = true;
                    break;
                }
        }
    }
    basis.elements = std::move(kept);
    sort_elements(basis);
    basis.reduced = true;
    return basis;
}

bool ideal_membership(const Binomial& f, const GrobnerBasis& basis) {
    return !reduce(f, basis).has_value();
}

std::vector<Binomial> to_binomials(const ModelMatrix& model, const GrobnerBasis& basis) {
    std::vector<Binomial> out;
    out.reserve(basis.elements.size());
    for (const OrientedBinomial& e : basis.elements)
        out.push_back(make_binomial(model, e.lead, e.trail));
    canonicalize_binomial_set(model.weights, out);
    return out;
}

std::vector<Binomial> saturate_variable(const ModelMatrix& model,
                                        const std::vector<Binomial>& gens,
                                        std::size_t var,
                                        const EngineOptions& opts) {
    TermOrder ord = degrevlex_lowest(var, model.weights);
    GrobnerBasis gb = reduce_gb(buchberger(gens, ord, opts));
    bool divided_any = false;
    std::vector<Binomial> divided;
    divided.reserve(gb.elements.size());
    for (OrientedBinomial e : gb.elements) {
        Int k = e.lead[var] < e.trail[var] ? e.lead[var] : e.trail[var];
        if (k > 0) {
            e.lead[var] -= k;
            e.trail[var] -= k;
            divided_any = true;
        }
        divided.push_back(make_binomial(model, e.lead, e.trail));
    }
    if (!divided_any) {
        canonicalize_binomial_set(model.weights, divided);
        return divided;
    }
    return to_binomials(model, reduce_gb(buchberger(divided, std::move(ord), opts)));
}

std::vector<Binomial> saturate_full(const ModelMatrix& model,
                                    std::vector<Binomial> gens,
                                    const EngineOptions& opts) {
    for (std::size_t var = 0; var < model.r; ++var)
        gens = saturate_variable(model, gens, var, opts);
    return gens;
}

} // namespace toric
