// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line each. Exits nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

struct criterion_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw criterion_failed(msg);
}

ModelMatrix model_of(std::initializer_list<std::initializer_list<int>> rows) {
    IntMat raw;
    for (const auto& row : rows) {
        IntRow r;
        for (int x : row) r.emplace_back(x);
        raw.push_back(std::move(r));
    }
    return validate_model(raw);
}

std::vector<Binomial> paper_quadrics(const ModelMatrix& paper) {
    auto quadric = [&](std::initializer_list<int> p, std::initializer_list<int> q) {
        Exponents plus(16, 0), minus(16, 0);
        for (int i : p) plus[i - 1] = 1;
        for (int i : q) minus[i - 1] = 1;
        return make_binomial(paper, plus, minus);
    };
    std::vector<Binomial> four{quadric({1, 11}, {3, 9}), quadric({2, 12}, {4, 10}),
                               quadric({5, 15}, {7, 13}), quadric({6, 16}, {8, 14})};
    canonicalize_binomial_set(paper.weights, four);
    return four;
}

std::string show(const ModelMatrix& m, const std::vector<Binomial>& bs) {
    std::string out;
    for (const Binomial& b : bs) out += render_binomial(b) + "; ";
    if (out.empty()) out = "(empty)";
    (void)m;
    return out;
}

// ---- criterion 1: paper reproduction ------------------------------------

void criterion_paper_reproduction() {
    ModelMatrix paper = builtin_model("paper-example");
    PipelineOptions opts;
    opts.jobs = 4;
    std::vector<Binomial> expected = paper_quadrics(paper);

    std::vector<Binomial> nabla_route =
        indispensable_binomials_combinatorial(paper, opts);
    require(nabla_route == expected,
            "combinatorial route differs: " + show(paper, nabla_route));

    std::vector<Binomial> grobner_route = indispensable_binomials_grobner(paper, opts);
    require(grobner_route == expected,
            "grobner route differs: " + show(paper, grobner_route));

    require(uniqueness_verdict(paper, opts).verdict == Verdict::unique,
            "verdict is not UNIQUE");

    MarkovBasis mb = markov_basis(paper, opts);
    require(mb.binomials == expected,
            "markov basis differs: " + show(paper, mb.binomials));
}

// ---- criterion 2: paper fiber and its automorphism ----------------------

void criterion_paper_fiber() {
    ModelMatrix paper = builtin_model("paper-example");
    Degree a = degree_of(paper, Exponents(16, 1));
    Fiber fiber = enumerate_fiber(paper, a);
    require(fiber.monomials.size() == 81,
            "fiber size " + std::to_string(fiber.monomials.size()) + ", expected 81");

    // table parametrization: u = (p_i, p_j, p_sigma(i), p_sigma(j))
    const int p[10][4] = {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 1, 2, 1}, {1, 0, 1, 2},
                          {2, 1, 0, 1}, {1, 2, 1, 0}, {0, 0, 2, 2}, {2, 0, 0, 2},
                          {2, 2, 0, 0}, {0, 2, 2, 0}};
    const int sigma[10] = {0, 1, 4, 5, 2, 3, 8, 9, 6, 7};
    std::set<Exponents> expected;
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j) {
            Exponents u;
            for (int k = 0; k < 4; ++k) u.emplace_back(p[i][k]);
            for (int k = 0; k < 4; ++k) u.emplace_back(p[j][k]);
            for (int k = 0; k < 4; ++k) u.emplace_back(p[sigma[i]][k]);
            for (int k = 0; k < 4; ++k) u.emplace_back(p[sigma[j]][k]);
            expected.insert(std::move(u));
        }
    std::set<Exponents> got(fiber.monomials.begin(), fiber.monomials.end());
    require(got == expected, "fiber does not match the table parametrization");

    // swapping the first and last 8 coordinates realizes (i,j) -> (sigma i,
    // sigma j); it must permute the fiber and preserve the skeleton
    NablaComplex nabla = build_nabla(fiber);
    const auto& mons = nabla.fiber.monomials;
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    std::vector<std::size_t> tau(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        Exponents swapped(mons[i].begin() + 8, mons[i].end());
        swapped.insert(swapped.end(), mons[i].begin(), mons[i].begin() + 8);
        auto it = index.find(swapped);
        require(it != index.end(), "block swap leaves the fiber");
        tau[i] = it->second;
    }
    auto edge = [&](std::size_t i, std::size_t j) {
        return std::find(nabla.adjacency[i].begin(), nabla.adjacency[i].end(), j) !=
               nabla.adjacency[i].end();
    };
    std::size_t edges = 0;
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = i + 1; j < mons.size(); ++j) {
            if (edge(i, j)) ++edges;
            require(edge(i, j) == edge(tau[i], tau[j]),
                    "block swap is not a skeleton automorphism");
        }
    std::vector<std::size_t> degseq(mons.size()), degseq_tau(mons.size());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        degseq[i] = nabla.adjacency[i].size();
        degseq_tau[i] = nabla.adjacency[tau[i]].size();
    }
    require(degseq == degseq_tau, "degree sequence moves under the automorphism");
    require(edges > 0, "paper fiber skeleton has no edges");
    require(connected_components(nabla).size() == 1,
            "paper fiber complex should be connected");
}

// ---- criterion 3: introduction example ----------------------------------

void criterion_introduction_example() {
    ModelMatrix m = model_of({{1, 1, 1}});
    require(indispensable_binomials_combinatorial(m).empty(),
            "combinatorial route found indispensable binomials");
    require(indispensable_binomials_grobner(m).empty(),
            "grobner route found indispensable binomials");
    std::vector<Exponents> mons = indispensable_monomials(m);
    std::vector<Exponents> expected{Exponents{Int(1), Int(0), Int(0)},
                                    Exponents{Int(0), Int(1), Int(0)},
                                    Exponents{Int(0), Int(0), Int(1)}};
    canonicalize_monomial_set(m.weights, expected);
    require(mons == expected, "indispensable monomials are not {x, y, z}");
    require(uniqueness_verdict(m).verdict == Verdict::not_unique,
            "verdict is not NOT_UNIQUE");
}

// ---- criterion 4: method agreement on random models ---------------------

void criterion_method_agreement() {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        ModelMatrix m = oracles::random_model(rng, 3, 5, 3);
        std::vector<Binomial> comb = indispensable_binomials_combinatorial(m);
        std::vector<Binomial> grob = indispensable_binomials_grobner(m);
        if (comb != grob) {
            std::string detail = "trial " + std::to_string(trial) + " model\n" +
                                 emit_matrix(m, Format::text) +
                                 "combinatorial: " + show(m, comb) +
                                 "\ngrobner: " + show(m, grob);
            throw criterion_failed(detail);
        }
    }
}

// ---- criterion 5: Lawrence liftings are always UNIQUE -------------------

void criterion_lawrence() {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        ModelMatrix m = oracles::random_model(rng, 2, 3, 3);
        require(lawrence_uniqueness(m).verdict == Verdict::unique,
                "lawrence verdict not UNIQUE at trial " + std::to_string(trial) +
                    "\n" + emit_matrix(m, Format::text));
        ModelMatrix lift = lawrence_lift(m);
        MarkovBasis mb = markov_basis(lift);
        std::vector<Binomial> indis = indispensable_binomials_combinatorial(lift);
        require(mb.binomials == indis,
                "markov element of the lift is dispensable at trial " +
                    std::to_string(trial));
    }
}

// ---- criterion 6: brute-force oracle equivalence ------------------------

void criterion_oracle_equivalence() {
    std::vector<ModelMatrix> models{
        model_of({{1, 1, 1}}),
        model_of({{2, 3}}),
        model_of({{1, 1, 1, 1}, {0, 1, 2, 3}}),
        model_of({{1, 2}}),
        model_of({{1, 0}, {0, 1}}),
        model_of({{1, 1}, {0, 2}}),
        model_of({{3, 4, 5}}),
        lawrence_lift(model_of({{1, 2}})),
    };
    std::mt19937 rng(606);
    for (int k = 0; k < 12; ++k) models.push_back(oracles::random_model(rng, 2, 3, 3));
    for (int k = 0; k < 12; ++k) models.push_back(oracles::random_model(rng, 2, 4, 3));
    for (int k = 0; k < 12; ++k) models.push_back(oracles::random_model(rng, 3, 4, 3));

    std::size_t used = 0;
    for (std::size_t idx = 0; idx < models.size(); ++idx) {
        const ModelMatrix& m = models[idx];
        PipelineOptions opts;
        opts.fiber_cap = 200;
        MarkovBasis mb;
        std::vector<Degree> candidates;
        try {
            candidates = candidate_degrees(m, opts);
            mb = markov_basis(m, opts);
        } catch (const error& e) {
            if (e.code() == errc::fiber_cap_exceeded) continue; // out of scope
            throw;
        }
        Int bound = 4;
        for (const Degree& a : candidates) {
            Int s = 0;
            for (const Int& x : a) s += x;
            if (s > bound) bound = s;
        }
        if (bound > 40) continue;
        auto buckets = oracles::fibers_up_to(m, bound);
        std::size_t largest = 0;
        for (const auto& [deg, fib] : buckets) largest = std::max(largest, fib.size());
        if (largest > 2000) continue;
        std::map<Degree, std::size_t> oracle;
        for (const auto& [deg, fib] : buckets) {
            std::size_t comps = oracles::gcd_graph_components(fib);
            if (comps >= 2) oracle[deg] = comps - 1;
        }
        std::map<Degree, std::size_t> impl;
        for (const Degree& d : mb.degrees) ++impl[d];
        if (impl != oracle) {
            std::string detail = "model " + std::to_string(idx) + ":\n" +
                                 emit_matrix(m, Format::text) + "oracle found " +
                                 std::to_string(oracle.size()) +
                                 " minimal degrees, implementation " +
                                 std::to_string(impl.size());
            throw criterion_failed(detail);
        }
        ++used;
    }
    require(used >= 25, "only " + std::to_string(used) + " models were usable");
}

// ---- criterion 7: engine invariants --------------------------------------

void criterion_engine_invariants() {
    std::vector<ModelMatrix> models{model_of({{1, 1, 1}}), model_of({{2, 3}}),
                                    model_of({{1, 1, 1, 1}, {0, 1, 2, 3}}),
                                    model_of({{6, 10, 15}}),
                                    model_of({{5, 7, 9, 11}})};
    std::mt19937 rng(707);
    for (int k = 0; k < 3; ++k) models.push_back(oracles::random_model(rng, 3, 5, 3));

    for (const ModelMatrix& m : models) {
        std::vector<Binomial> gens;
        for (const IntRow& w : lattice_kernel(m))
            gens.push_back(binomial_from_vector(m, w));
        gens = saturate_full(m, gens);
        TermOrder ord = degrevlex_lowest(0, m.weights);
        GrobnerBasis reference = reduce_gb(buchberger(gens, ord));
        std::string reference_bytes = emit_grobner(m, reference, Format::text);
        for (int perm = 0; perm < 20; ++perm) {
            std::shuffle(gens.begin(), gens.end(), rng);
            std::string bytes =
                emit_grobner(m, reduce_gb(buchberger(gens, ord)), Format::text);
            require(bytes == reference_bytes,
                    "reduced basis changed under generator permutation");
        }

        // membership versus the linear-algebra criterion
        std::uniform_int_distribution<int> e(0, 4);
        std::uniform_int_distribution<std::size_t> pick(0, m.r - 1);
        int pairs = 0;
        while (pairs < 1000) {
            Exponents u(m.r, 0);
            for (auto& x : u) x = e(rng);
            Int target = dot(m.weights, u);
            // random walk assembling v with the same weighted degree
            Exponents v(m.r, 0);
            Int remaining = target;
            bool ok = true;
            int guard = 0;
            while (remaining > 0) {
                std::size_t j = pick(rng);
                if (m.weights[j] <= remaining) {
                    v[j] += 1;
                    remaining -= m.weights[j];
                } else if (++guard > 200) {
                    ok = false;
                    break;
                }
            }
            if (!ok) v = u;
            ++pairs;
            bool member =
                !reduce_pair(u, v, reference.elements, reference.order).has_value();
            require(member == (degree_of(m, u) == degree_of(m, v)),
                    "membership disagrees with the linear criterion");
        }
    }
}

// ---- criterion 8: twisted cubic saturation -------------------------------

void criterion_saturation() {
    ModelMatrix tc = model_of({{1, 1, 1, 1}, {0, 1, 2, 3}});
    std::vector<Binomial> gens{
        binomial_from_vector(tc, {Int(1), Int(-2), Int(1), Int(0)}),
        binomial_from_vector(tc, {Int(0), Int(1), Int(-2), Int(1)})};
    std::vector<Binomial> sat = saturate_full(tc, gens);
    GrobnerBasis basis = reduce_gb(buchberger(sat, degrevlex_lowest(0, tc.weights)));
    Exponents plus{Int(1), Int(0), Int(0), Int(1)}, minus{Int(0), Int(1), Int(1), Int(0)};
    require(ideal_membership(make_binomial(tc, plus, minus), basis),
            "x1*x4 - x2*x3 is not in the saturated ideal");

    std::vector<Binomial> sat2 = saturate_full(tc, sat);
    std::vector<Binomial> sat3 = saturate_full(tc, sat2);
    require(sat2 == sat3, "saturate_full is not idempotent");
    GrobnerBasis basis2 = reduce_gb(buchberger(sat2, degrevlex_lowest(0, tc.weights)));
    for (const Binomial& b : sat) require(ideal_membership(b, basis2), "ideal shrank");
    for (const Binomial& b : sat2) require(ideal_membership(b, basis), "ideal grew");
}

struct Criterion {
    std::string name;
    double seconds_limit;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 paper reproduction: four indispensable binomials, UNIQUE", 120.0,
         criterion_paper_reproduction},
        {"2 paper fiber: 81 monomials, block-swap automorphism", 5.0,
         criterion_paper_fiber},
        {"3 introduction example: no indispensables, NOT_UNIQUE", 1.0,
         criterion_introduction_example},
        {"4 method agreement on 200 random 3x5 models", 600.0,
         criterion_method_agreement},
        {"5 Lawrence lifting UNIQUE on 50 random 2x3 models", 600.0,
         criterion_lawrence},
        {"6 Markov degrees match the brute-force oracle", 300.0,
         criterion_oracle_equivalence},
        {"7 engine invariants: permutation stability, membership", 300.0,
         criterion_engine_invariants},
        {"8 twisted cubic saturation and idempotence", 10.0, criterion_saturation},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << verdict << "  [" << elapsed << "s] " << c.name;
        if (verdict == "PASS" && elapsed > c.seconds_limit) {
            line << " (exceeded " << c.seconds_limit << "s budget)";
            ++failures;
        }
        std::cout << line.str() << "\n";
        if (!detail.empty()) std::cout << "      " << detail << "\n";
    }
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
