#ifndef TORIC_INDISPENSABLE_HPP
#define TORIC_INDISPENSABLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/fiber.hpp"
#include "toric/grobner.hpp"

namespace toric {

struct DegreeReport {
    Degree degree;
    std::size_t fiber_size = 0;
    std::size_t component_count = 0;
    bool minimal = false;            // some minimal generating set needs this degree
    bool indispensable = false;      // fiber is exactly two coprime monomials
    bool quasi_indispensable = false; // isolated vertex and fiber size >= 2
};

// Minimal binomial generating set. The degrees multiset is an invariant
// of the ideal; the binomials themselves depend on the tie-break rule.
struct MarkovBasis {
    std::vector<Binomial> binomials; // canonical order
    std::vector<Degree> degrees;     // sorted multiset of element degrees
};

struct PipelineOptions {
    std::size_t fiber_cap = default_fiber_cap;
    unsigned jobs = 1; // fan-out for independent per-degree / per-order runs
    bool chain_criterion = false;
};

enum class Verdict { unique, not_unique };

struct UniquenessResult {
    Verdict verdict = Verdict::unique;
    std::optional<Degree> witness; // a non-indispensable minimal degree
};

// Reduced Grobner basis of the toric ideal under the degrevlex order with
// X_1 lowest, obtained from a lattice kernel basis by full saturation.
GrobnerBasis toric_ideal_basis(const ModelMatrix& model,
                               const PipelineOptions& opts = {});

// Multidegrees of the reduced-basis elements; a superset of the minimal
// degrees, since any homogeneous generating set must contain elements of
// every minimal degree.
std::vector<Degree> candidate_degrees(const ModelMatrix& model,
                                      const PipelineOptions& opts = {});

// Candidate degrees whose fiber complex is disconnected, with statistics.
std::vector<DegreeReport> minimal_degrees(const ModelMatrix& model,
                                          const PipelineOptions& opts = {});

MarkovBasis markov_basis(const ModelMatrix& model,
                         const PipelineOptions& opts = {});

// Degrees whose fiber is exactly two coprime monomials give the
// indispensable binomials.
std::vector<Binomial> indispensable_binomials_combinatorial(
    const ModelMatrix& model, const PipelineOptions& opts = {});

// All indispensable binomials of degrees strictly below a, read off the
// 1-faces of the fiber complex of a whose gcd survives every 2-face;
// degree a itself is included via the two-coprime-monomial criterion.
std::vector<Binomial> indispensable_below(const ModelMatrix& model,
                                          const Degree& a,
                                          const PipelineOptions& opts = {});

// Intersection of the r reduced Grobner bases under the degrevlex orders
// with X_i lowest, i = 1..r, as canonical sign-insensitive sets.
std::vector<Binomial> indispensable_binomials_grobner(
    const ModelMatrix& model, const PipelineOptions& opts = {});

// Monomials appearing in at least one binomial of every binomial
// generating set: isolated vertices of disconnected fiber complexes.
std::vector<Exponents> indispensable_monomials(const ModelMatrix& model,
                                               const PipelineOptions& opts = {});

// For each fiber monomial X^u of degree a and each maximal gcd(X^u, X^v)
// over the rest of the fiber, X^u / gcd is an indispensable monomial.
std::vector<Exponents> indispensable_monomials_at(const ModelMatrix& model,
                                                  const Degree& a,
                                                  const PipelineOptions& opts = {});

// UNIQUE iff the Markov basis coincides with the indispensable binomials.
UniquenessResult uniqueness_verdict(const ModelMatrix& model,
                                    const PipelineOptions& opts = {});

// Verdict for the Lawrence lifting; always UNIQUE.
UniquenessResult lawrence_uniqueness(const ModelMatrix& model,
                                     const PipelineOptions& opts = {});

// True iff gens is the reduced Grobner basis of its ideal under every
// degrevlex-lowest order; a sufficient condition for a unique minimal
// binomial generating set.
bool all_orders_reduced_gb_check(const std::vector<Binomial>& gens,
                                 const ModelMatrix& model,
                                 const PipelineOptions& opts = {});

} // namespace toric

#endif
