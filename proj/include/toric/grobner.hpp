#ifndef TORIC_GROBNER_HPP
#define TORIC_GROBNER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/monomial.hpp"
#include "toric/term_order.hpp"

namespace toric {

// Binomial oriented under an active term order: lead > trail.
struct OrientedBinomial {
    Exponents lead;
    Exponents trail;

    friend bool operator==(const OrientedBinomial& a, const OrientedBinomial& b) {
        return a.lead == b.lead && a.trail == b.trail;
    }
};

struct GrobnerBasis {
    std::vector<OrientedBinomial> elements; // sorted ascending by lead
    TermOrder order;
    bool reduced = false;
};

struct EngineOptions {
    // Buchberger's coprime-lead criterion is always applied; the chain
    // criterion is optional. Both leave the reduced basis unchanged.
    bool chain_criterion = false;
};

OrientedBinomial orient(const Binomial& b, const TermOrder& ord);

// Normal form of X^m1 - X^m2 modulo the basis: rewrites both monomials
// until neither is divisible by a basis lead. nullopt means the two
// monomials met, i.e. the input reduced to zero. Reducing a binomial by
// binomials always yields a binomial or zero.
std::optional<OrientedBinomial> reduce_pair(Exponents m1, Exponents m2,
                                            const std::vector<OrientedBinomial>& basis,
                                            const TermOrder& ord);
std::optional<OrientedBinomial> reduce(const Binomial& f, const GrobnerBasis& basis);

// lcm(leads)/lead_f * f - lcm(leads)/lead_g * g; nullopt when the two
// trails lift to the same monomial.
std::optional<OrientedBinomial> s_binomial(const OrientedBinomial& f,
                                           const OrientedBinomial& g,
                                           const TermOrder& ord);

// Buchberger's algorithm. S-pairs are processed in increasing first-row
// degree of the pair lcm, ties by pair index, so the run is deterministic.
GrobnerBasis buchberger(const std::vector<Binomial>& gens, TermOrder ord,
                        const EngineOptions& opts = {});

// The unique reduced basis: minimal leads, fully tail-reduced, sorted.
GrobnerBasis reduce_gb(GrobnerBasis basis);

// Requires a Grobner basis of the ideal (reduced or not).
bool ideal_membership(const Binomial& f, const GrobnerBasis& basis);

// Canonical-storage binomials of the basis elements, canonically sorted.
// Validates A-homogeneity of every element against the model.
std::vector<Binomial> to_binomials(const ModelMatrix& model, const GrobnerBasis& basis);

// Generators of (<gens> : X_var^infinity): reduced basis under the
// degrevlex order with X_var lowest, each element divided by the common
// X_var power of its two sides, interreduced again for canonical output.
std::vector<Binomial> saturate_variable(const ModelMatrix& model,
                                        const std::vector<Binomial>& gens,
                                        std::size_t var,
                                        const EngineOptions& opts = {});

// (<gens> : (X_1...X_r)^infinity) by saturating each variable in turn.
// When the input generators come from a lattice basis of ker(A) this
// yields a generating set of the full toric ideal.
std::vector<Binomial> saturate_full(const ModelMatrix& model,
                                    std::vector<Binomial> gens,
                                    const EngineOptions& opts = {});

} // namespace toric

#endif
