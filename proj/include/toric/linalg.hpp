#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

#include <cstddef>

#include "toric/vec.hpp"

namespace toric {

// Bring the first `pivot_cols` columns of m into row echelon form using
// unimodular row operations (extended-Euclid pivoting, fixed pivot rule).
// Returns the number of pivot rows; rows at index >= return value have
// zeros in all pivot columns. Pivots are made positive and the entries
// above each pivot are reduced into [0, pivot).
std::size_t echelonize(IntMat& m, std::size_t pivot_cols);

// Canonical row-style Hermite normal form of the lattice spanned by the
// rows of m. Zero rows are dropped. Two row sets span the same lattice
// iff their HNFs are identical.
IntMat hnf_rows(IntMat m);

std::size_t int_rank(IntMat m);

// Basis of the integer kernel {v in Z^cols : m * v = 0}, with m given as
// a list of rows of length `cols`. The basis is returned in HNF so the
// output is a canonical function of the kernel lattice.
IntMat integer_kernel(const IntMat& m, std::size_t cols);

} // namespace toric

#endif
