#include "toric/indispensable.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace toric {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    const std::size_t nthreads = std::min<std::size_t>(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

EngineOptions engine_options(const PipelineOptions& opts) {
    return EngineOptions{opts.chain_criterion};
}

// Degrees sort by coordinate sum (the weighted degree of their fiber,
// since the grading weights are the column sums), then lexicographically.
bool degree_less(const Degree& a, const Degree& b) {
    Int sa = 0, sb = 0;
    for (const Int& x : a) sa += x;
    for (const Int& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return lex_cmp(a, b) < 0;
}

std::vector<Binomial> saturated_generators(const ModelMatrix& model,
                                           const PipelineOptions& opts) {
    LatticeBasis kernel = lattice_kernel(model);
    std::vector<Binomial> gens;
    gens.reserve(kernel.size());
    for (const IntRow& w : kernel) gens.push_back(binomial_from_vector(model, w));
    return saturate_full(model, std::move(gens), engine_options(opts));
}

struct DegreeAnalysis {
    DegreeReport report;
    Fiber fiber;
    std::vector<std::vector<std::size_t>> components;
};

DegreeAnalysis analyze_degree(const ModelMatrix& model, const Degree& a,
                              const PipelineOptions& opts) {
    DegreeAnalysis out;
    NablaComplex nabla = build_nabla(enumerate_fiber(model, a, opts.fiber_cap));
    out.components = connected_components(nabla);
    out.fiber = std::move(nabla.fiber);
    bool isolated = false;
    for (const auto& comp : out.components) isolated = isolated || comp.size() == 1;
    out.report.degree = a;
    out.report.fiber_size = out.fiber.monomials.size();
    out.report.component_count = out.components.size();
    out.report.minimal = out.components.size() >= 2;
    out.report.indispensable =
        out.report.fiber_size == 2 && out.report.component_count == 2;
    out.report.quasi_indispensable = isolated && out.report.fiber_size >= 2;
    return out;
}

std::vector<Degree> degrees_of_basis(const ModelMatrix& model,
                                     const GrobnerBasis& basis) {
    std::vector<Degree> degrees;
    degrees.reserve(basis.elements.size());
    for (const OrientedBinomial& e : basis.elements)
        degrees.push_back(degree_of(model, e.lead));
    std::sort(degrees.begin(), degrees.end(), degree_less);
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return degrees;
}

// One analysis per candidate degree, in canonical degree order.
std::vector<DegreeAnalysis> analyze_candidates(const ModelMatrix& model,
                                               const GrobnerBasis& basis,
                                               const PipelineOptions& opts) {
    std::vector<Degree> degrees = degrees_of_basis(model, basis);
    std::vector<DegreeAnalysis> analyses(degrees.size());
    parallel_for(degrees.size(), opts.jobs, [&](std::size_t i) {
        analyses[i] = analyze_degree(model, degrees[i], opts);
    });
    return analyses;
}

MarkovBasis markov_from_analyses(const ModelMatrix& model,
                                 const GrobnerBasis& toric_basis,
                                 const std::vector<DegreeAnalysis>& analyses,
                                 const PipelineOptions& opts) {
    MarkovBasis mb;
    for (const DegreeAnalysis& an : analyses) {
        if (!an.report.minimal) continue;
        // Components are ordered by smallest member and the fiber is
        // canonically sorted, so components[0] holds the canonically
        // smallest monomial; star the other components into it.
        const Exponents& hub = an.fiber.monomials[an.components[0][0]];
        for (std::size_t c = 1; c < an.components.size(); ++c)
            mb.binomials.push_back(make_binomial(
                model, an.fiber.monomials[an.components[c][0]], hub));
    }
    canonicalize_binomial_set(model.weights, mb.binomials);
    mb.degrees.reserve(mb.binomials.size());
    for (const Binomial& b : mb.binomials) mb.degrees.push_back(b.degree);
    std::sort(mb.degrees.begin(), mb.degrees.end(), degree_less);

    // Mutual membership against the reduced basis certifies generation.
    for (const Binomial& b : mb.binomials)
        if (!ideal_membership(b, toric_basis))
            fail(errc::generation_check_failed,
                 "markov element outside the toric ideal: " + render_binomial(b));
    if (!mb.binomials.empty() || !toric_basis.elements.empty()) {
        GrobnerBasis check = reduce_gb(buchberger(
            mb.binomials, degrevlex_lowest(0, model.weights), engine_options(opts)));
        for (const OrientedBinomial& e : toric_basis.elements)
            if (reduce_pair(e.lead, e.trail, check.elements, check.order))
                fail(errc::generation_check_failed,
                     "markov basis does not generate the toric ideal");
    }
    return mb;
}

std::vector<Binomial> indispensable_from_analyses(
    const ModelMatrix& model, const std::vector<DegreeAnalysis>& analyses) {
    std::vector<Binomial> out;
    for (const DegreeAnalysis& an : analyses)
        if (an.report.indispensable)
            out.push_back(
                make_binomial(model, an.fiber.monomials[0], an.fiber.monomials[1]));
    canonicalize_binomial_set(model.weights, out);
    return out;
}

UniquenessResult verdict_from_analyses(const ModelMatrix& model,
                                       const GrobnerBasis& toric_basis,
                                       const std::vector<DegreeAnalysis>& analyses,
                                       const PipelineOptions& opts) {
    MarkovBasis mb = markov_from_analyses(model, toric_basis, analyses, opts);
    std::vector<Binomial> indis = indispensable_from_analyses(model, analyses);
    UniquenessResult result;
    if (mb.binomials == indis) {
        result.verdict = Verdict::unique;
        return result;
    }
    result.verdict = Verdict::not_unique;
    for (const DegreeAnalysis& an : analyses)
        if (an.report.minimal && !an.report.indispensable) {
            result.witness = an.report.degree;
            break;
        }
    return result;
}

} // namespace

GrobnerBasis toric_ideal_basis(const ModelMatrix& model,
                               const PipelineOptions& opts) {
    std::vector<Binomial> sat = saturated_generators(model, opts);
    return reduce_gb(buchberger(sat, degrevlex_lowest(0, model.weights),
                                engine_options(opts)));
}

std::vector<Degree> candidate_degrees(const ModelMatrix& model,
                                      const PipelineOptions& opts) {
    return degrees_of_basis(model, toric_ideal_basis(model, opts));
}

std::vector<DegreeReport> minimal_degrees(const ModelMatrix& model,
                                          const PipelineOptions& opts) {
    GrobnerBasis basis = toric_ideal_basis(model, opts);
    std::vector<DegreeReport> reports;
    for (DegreeAnalysis& an : analyze_candidates(model, basis, opts))
        if (an.report.minimal) reports.push_back(std::move(an.report));
    return reports;
}

MarkovBasis markov_basis(const ModelMatrix& model, const PipelineOptions& opts) {
    GrobnerBasis basis = toric_ideal_basis(model, opts);
    return markov_from_analyses(model, basis, analyze_candidates(model, basis, opts),
                                opts);
}

std::vector<Binomial> indispensable_binomials_combinatorial(
    const ModelMatrix& model, const PipelineOptions& opts) {
    GrobnerBasis basis = toric_ideal_basis(model, opts);
    return indispensable_from_analyses(model, analyze_candidates(model, basis, opts));
}

std::vector<Binomial> indispensable_below(const ModelMatrix& model,
                                          const Degree& a,
                                          const PipelineOptions& opts) {
    Fiber fiber = enumerate_fiber(model, a, opts.fiber_cap);
    if (fiber.monomials.empty())
        fail(errc::empty_fiber, "degree has an empty fiber");
    NablaComplex nabla = build_nabla(std::move(fiber));
    const auto& mons = nabla.fiber.monomials;
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        for (std::size_t j : nabla.adjacency[i]) {
            if (j <= i) continue;
            Exponents pair_gcd = gcd_monomials({mons[i], mons[j]});
            bool survives = true;
            for (std::size_t w = 0; w < mons.size() && survives; ++w) {
                if (w == i || w == j) continue;
                bool drops = false;
                for (std::size_t k = 0; k < pair_gcd.size() && !drops; ++k)
                    drops = mons[w][k] < pair_gcd[k];
                survives = drops;
            }
            if (survives)
                out.push_back(divide_binomial_by_gcd(
                    model, make_binomial(model, mons[i], mons[j])));
        }
    }
    if (mons.size() == 2 && is_zero(gcd_monomials({mons[0], mons[1]})))
        out.push_back(make_binomial(model, mons[0], mons[1]));
    canonicalize_binomial_set(model.weights, out);
    return out;
}

std::vector<Binomial> indispensable_binomials_grobner(
    const ModelMatrix& model, const PipelineOptions& opts) {
    std::vector<Binomial> sat = saturated_generators(model, opts);
    if (sat.empty()) return {};
    std::vector<std::vector<Binomial>> per_var(model.r);
    parallel_for(model.r, opts.jobs, [&](std::size_t i) {
        per_var[i] = to_binomials(
            model, reduce_gb(buchberger(sat, degrevlex_lowest(i, model.weights),
                                        engine_options(opts))));
    });
    auto less = [&](const Binomial& a, const Binomial& b) {
        return binomial_canonical_less(model.weights, a, b);
    };
    std::vector<Binomial> acc = per_var[0];
    for (std::size_t i = 1; i < per_var.size() && !acc.empty(); ++i) {
        std::vector<Binomial> merged;
        std::set_intersection(acc.begin(), acc.end(), per_var[i].begin(),
                              per_var[i].end(), std::back_inserter(merged), less);
        acc = std::move(merged);
    }
    return acc;
}

std::vector<Exponents> indispensable_monomials(const ModelMatrix& model,
                                               const PipelineOptions& opts) {
    GrobnerBasis basis = toric_ideal_basis(model, opts);
    std::vector<Exponents> out;
    for (const DegreeAnalysis& an : analyze_candidates(model, basis, opts)) {
        if (!an.report.minimal || an.report.fiber_size < 2) continue;
        for (const auto& comp : an.components)
            if (comp.size() == 1) out.push_back(an.fiber.monomials[comp[0]]);
    }
    canonicalize_monomial_set(model.weights, out);
    return out;
}

std::vector<Exponents> indispensable_monomials_at(const ModelMatrix& model,
                                                  const Degree& a,
                                                  const PipelineOptions& opts) {
    Fiber fiber = enumerate_fiber(model, a, opts.fiber_cap);
    if (fiber.monomials.empty())
        fail(errc::empty_fiber, "degree has an empty fiber");
    const auto& mons = fiber.monomials;
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        std::vector<Exponents> gcds;
        for (std::size_t j = 0; j < mons.size(); ++j) {
            if (j == i) continue;
            gcds.push_back(gcd_monomials({mons[i], mons[j]}));
        }
        if (gcds.empty()) continue;
        std::sort(gcds.begin(), gcds.end());
        gcds.erase(std::unique(gcds.begin(), gcds.end()), gcds.end());
        for (const Exponents& g : gcds) {
            bool maximal = true;
            for (const Exponents& h : gcds)
                if (h != g && divides(g, h)) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(vec_sub(mons[i], g));
        }
    }
    canonicalize_monomial_set(model.weights, out);
    return out;
}

UniquenessResult uniqueness_verdict(const ModelMatrix& model,
                                    const PipelineOptions& opts) {
    GrobnerBasis basis = toric_ideal_basis(model, opts);
    return verdict_from_analyses(model, basis,
                                 analyze_candidates(model, basis, opts), opts);
}

UniquenessResult lawrence_uniqueness(const ModelMatrix& model,
                                     const PipelineOptions& opts) {
    return uniqueness_verdict(lawrence_lift(model), opts);
}

bool all_orders_reduced_gb_check(const std::vector<Binomial>& gens,
                                 const ModelMatrix& model,
                                 const PipelineOptions& opts) {
    std::vector<Binomial> canon = gens;
    canonicalize_binomial_set(model.weights, canon);
    std::vector<char> matches(model.r, 0);
    parallel_for(model.r, opts.jobs, [&](std::size_t i) {
        std::vector<Binomial> reduced = to_binomials(
            model, reduce_gb(buchberger(gens, degrevlex_lowest(i, model.weights),
                                        engine_options(opts))));
        matches[i] = reduced == canon ? 1 : 0;
    });
    return std::all_of(matches.begin(), matches.end(), [](char c) { return c == 1; });
}

} // namespace toric
