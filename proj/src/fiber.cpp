#include "toric/fiber.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace toric {

namespace {

struct FiberSearch {
    const ModelMatrix& model;
    std::size_t cap;
    std::vector<Exponents> out;
    Exponents current;

    void run(Degree residue, std::size_t var) {
        if (is_zero(residue)) {
            // columns are nonzero, so the remaining variables are forced to 0
            emit();
            return;
        }
        if (var == model.r) return;
        if (var + 1 == model.r) {
            solve_last(residue, var);
            return;
        }
        if (detail::residue_unreachable(model, residue, var)) return;
        Int bound(-1);
        for (std::size_t i = 0; i < model.d; ++i) {
            if (model.rows[i][var] == 0) continue;
            Int b;
            mpz_fdiv_q(b.get_mpz_t(), residue[i].get_mpz_t(),
                       model.rows[i][var].get_mpz_t());
            if (bound < 0 || b < bound) bound = b;
        }
        for (Int k = 0; k <= bound; ++k) {
            current[var] = k;
            run(residue, var + 1);
            for (std::size_t i = 0; i < model.d; ++i)
                residue[i] -= model.rows[i][var];
        }
        current[var] = 0;
    }

    // the last variable is determined: k = residue_i / A_i,var at any row
    // with a positive entry, if it divides and matches every other row
    void solve_last(const Degree& residue, std::size_t var) {
        std::size_t pivot = model.d;
        for (std::size_t i = 0; i < model.d; ++i)
            if (model.rows[i][var] != 0) {
                pivot = i;
                break;
            }
        Int k, rem;
        mpz_fdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), residue[pivot].get_mpz_t(),
                    model.rows[pivot][var].get_mpz_t());
        if (rem != 0) return;
        for (std::size_t i = 0; i < model.d; ++i)
            if (residue[i] != model.rows[i][var] * k) return;
        current[var] = k;
        emit();
        current[var] = 0;
    }

    void emit() {
        if (out.size() >= cap)
            fail(errc::fiber_cap_exceeded,
                 "fiber exceeds cap of " + std::to_string(cap) + " monomials");
        out.push_back(current);
    }
};

// Support bitmask, one word per 64 variables.
std::vector<std::uint64_t> support_mask(const Exponents& u) {
    std::vector<std::uint64_t> mask((u.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) mask[i / 64] |= std::uint64_t(1) << (i % 64);
    return mask;
}

bool masks_intersect(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

Fiber enumerate_fiber(const ModelMatrix& model, const Degree& a,
                      std::size_t cap) {
    if (a.size() != model.d)
        fail(errc::length_mismatch, "degree length differs from model dimension");
    if (!all_nonnegative(a))
        fail(errc::negative_entry, "degree has negative coordinates");
    FiberSearch search{model, cap, {}, Exponents(model.r, 0)};
    search.run(a, 0);
    Fiber fiber;
    fiber.degree = a;
    fiber.monomials = std::move(search.out);
    canonicalize_monomial_set(model.weights, fiber.monomials);
    return fiber;
}

NablaComplex build_nabla(Fiber fiber) {
    NablaComplex nabla;
    const std::size_t n = fiber.monomials.size();
    nabla.adjacency.assign(n, {});
    std::vector<std::vector<std::uint64_t>> masks(n);
    for (std::size_t i = 0; i < n; ++i)
        masks[i] = support_mask(fiber.monomials[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (masks_intersect(masks[i], masks[j])) {
                nabla.adjacency[i].push_back(j);
                nabla.adjacency[j].push_back(i);
            }
    nabla.fiber = std::move(fiber);
    return nabla;
}

bool is_face(const std::vector<Exponents>& F) {
    return !is_zero(gcd_monomials(F));
}

std::vector<std::vector<std::size_t>> connected_components(const NablaComplex& nabla) {
    const std::size_t n = nabla.fiber.monomials.size();
    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w : nabla.adjacency[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<Exponents> isolated_vertices(const NablaComplex& nabla) {
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < nabla.fiber.monomials.size(); ++i)
        if (nabla.adjacency[i].empty()) out.push_back(nabla.fiber.monomials[i]);
    return out;
}

bool triple_condition(const Exponents& u, const Exponents& v, const Fiber& fiber) {
    bool u_in = false, v_in = false;
    for (const Exponents& m : fiber.monomials) {
        u_in = u_in || m == u;
        v_in = v_in || m == v;
    }
    if (!u_in || !v_in)
        fail(errc::not_a_face, "pair is not contained in the fiber");
    Exponents pair_gcd = gcd_monomials({u, v});
    if (is_zero(pair_gcd))
        fail(errc::not_a_face, "pair has trivial gcd, not a 1-face");
    for (const Exponents& w : fiber.monomials) {
        if (w == u || w == v) continue;
        Exponents triple_gcd = pair_gcd;
        for (std::size_t i = 0; i < triple_gcd.size(); ++i)
            if (w[i] < triple_gcd[i]) triple_gcd[i] = w[i];
        if (triple_gcd == pair_gcd) return false;
    }
    return true;
}

} // namespace toric
