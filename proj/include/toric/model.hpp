#ifndef TORIC_MODEL_HPP
#define TORIC_MODEL_HPP

#include <cstddef>

#include "toric/linalg.hpp"
#include "toric/vec.hpp"

namespace toric {

// Nonnegative integer d x r matrix whose columns generate the semigroup.
// Invariants (enforced by validate_model): every entry >= 0, no zero
// column, d >= 1, r >= 1. The grading weights are the column sums; they
// lie in the row space of the matrix, so monomials of equal multidegree
// always have equal weighted degree.
struct ModelMatrix {
    IntMat rows;      // d rows of length r
    std::size_t d = 0;
    std::size_t r = 0;
    Weights weights;  // column sums, all strictly positive
};

using LatticeBasis = IntMat; // rows: integer vectors v with A*v = 0

ModelMatrix validate_model(const IntMat& raw);

// The multidegree A*u of a monomial X^u.
Degree degree_of(const ModelMatrix& model, const Exponents& u);

Int weighted_degree(const ModelMatrix& model, const Exponents& u);

// Canonical basis of ker_Z(A), computed by integer elimination with a
// fixed pivot rule and returned in Hermite normal form.
LatticeBasis lattice_kernel(const ModelMatrix& model);

// The (d+r) x (2r) matrix with column i = (a_i, e_i) and column r+i =
// (0, e_i). Always a valid ModelMatrix.
ModelMatrix lawrence_lift(const ModelMatrix& model);

// b <= a in the semigroup order: a - b is componentwise nonnegative AND
// is itself the degree of some monomial (membership, not just the cone).
bool degree_leq(const ModelMatrix& model, const Degree& b, const Degree& a);

namespace detail {

// Pruning test for the factorization searches: true when columns
// var..r-1 provably cannot reach the (componentwise nonnegative) residue,
// because some row demands more than those columns can supply under their
// per-column quotient bounds.
bool residue_unreachable(const ModelMatrix& model, const Degree& residue,
                         std::size_t var);

} // namespace detail

} // namespace toric

#endif
