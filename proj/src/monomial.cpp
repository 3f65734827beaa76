#include "toric/monomial.hpp"

#include <algorithm>

namespace toric {

Exponents gcd_monomials(const std::vector<Exponents>& F) {
    if (F.empty())
        fail(errc::empty_set, "gcd of an empty monomial set");
    Exponents g = F[0];
    for (std::size_t k = 1; k < F.size(); ++k) {
        if (F[k].size() != g.size())
            fail(errc::length_mismatch, "gcd: exponent vector lengths differ");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (F[k][i] < g[i]) g[i] = F[k][i];
    }
    return g;
}

std::vector<std::size_t> support(const Exponents& u) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) s.push_back(i);
    return s;
}

bool divides(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "divides: exponent vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Binomial make_binomial(const ModelMatrix& model, const Exponents& u,
                       const Exponents& v) {
    if (u == v)
        fail(errc::zero_vector, "binomial sides are equal");
    Degree du = degree_of(model, u);
    Degree dv = degree_of(model, v);
    if (du != dv)
        fail(errc::not_in_kernel,
             "binomial sides have different multidegrees: " +
                 render_monomial(u) + " vs " + render_monomial(v));
    Binomial b;
    if (glex_cmp(model.weights, u, v) > 0) {
        b.plus = u;
        b.minus = v;
    } else {
        b.plus = v;
        b.minus = u;
    }
    b.degree = std::move(du);
    return b;
}

Binomial binomial_from_vector(const ModelMatrix& model, const IntRow& w) {
    if (w.size() != model.r)
        fail(errc::length_mismatch, "kernel vector has wrong length");
    if (is_zero(w))
        fail(errc::zero_vector, "kernel vector is zero");
    Exponents plus(model.r, 0), minus(model.r, 0);
    for (std::size_t i = 0; i < model.r; ++i) {
        if (w[i] > 0)
            plus[i] = w[i];
        else
            minus[i] = -w[i];
    }
    return make_binomial(model, plus, minus);
}

Binomial divide_binomial_by_gcd(const ModelMatrix& model, const Binomial& b) {
    Exponents g = gcd_monomials({b.plus, b.minus});
    if (is_zero(g)) return b;
    return make_binomial(model, vec_sub(b.plus, g), vec_sub(b.minus, g));
}

bool monomial_canonical_less(const Weights& w, const Exponents& a,
                             const Exponents& b) {
    Int da = dot(w, a), db = dot(w, b);
    if (da != db) return da < db;
    return lex_cmp(a, b) > 0;
}

bool binomial_canonical_less(const Weights& w, const Binomial& a,
                             const Binomial& b) {
    Int da = dot(w, a.plus), db = dot(w, b.plus);
    if (da != db) return da < db;
    int c = lex_cmp(a.plus, b.plus);
    if (c != 0) return c > 0;
    return lex_cmp(a.minus, b.minus) > 0;
}

void canonicalize_monomial_set(const Weights& w, std::vector<Exponents>& set) {
    std::sort(set.begin(), set.end(), [&](const Exponents& a, const Exponents& b) {
        return monomial_canonical_less(w, a, b);
    });
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

void canonicalize_binomial_set(const Weights& w, std::vector<Binomial>& set) {
    std::sort(set.begin(), set.end(), [&](const Binomial& a, const Binomial& b) {
        return binomial_canonical_less(w, a, b);
    });
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

std::string render_monomial(const Exponents& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (u[i] != 1) out += '^' + u[i].get_str();
    }
    return out.empty() ? "1" : out;
}

std::string render_binomial(const Binomial& b) {
    return render_monomial(b.plus) + " - " + render_monomial(b.minus);
}

} // namespace toric
