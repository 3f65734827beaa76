#include "toric/linalg.hpp"

#include <algorithm>
#include <limits>

namespace toric {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

void row_submul(IntRow& target, const Int& q, const IntRow& source) {
    if (q == 0) return;
    for (std::size_t k = 0; k < target.size(); ++k)
        target[k] -= q * source[k];
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

std::size_t echelonize(IntMat& m, std::size_t pivot_cols) {
    if (m.empty()) return 0;
    const std::size_t ncols = std::min(pivot_cols, m[0].size());
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        // Euclid on the column: repeatedly bring the minimal-|.|
        // nonzero entry up and reduce the others modulo it.
        while (true) {
            std::size_t best = npos;
            for (std::size_t j = row; j < m.size(); ++j) {
                if (m[j][col] == 0) continue;
                if (best == npos ||
                    mpz_cmpabs(m[j][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0)
                    best = j;
            }
            if (best == npos) break; // column clear below `row`
            std::swap(m[row], m[best]);
            bool clean = true;
            for (std::size_t j = row + 1; j < m.size(); ++j) {
                if (m[j][col] == 0) continue;
                row_submul(m[j], floor_div(m[j][col], m[row][col]), m[row]);
                if (m[j][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[row][col] != 0) {
            if (m[row][col] < 0)
                for (Int& x : m[row]) x = -x;
            for (std::size_t j = 0; j < row; ++j)
                row_submul(m[j], floor_div(m[j][col], m[row][col]), m[row]);
            ++row;
        }
    }
    return row;
}

IntMat hnf_rows(IntMat m) {
    if (m.empty()) return m;
    std::size_t rank = echelonize(m, m[0].size());
    m.resize(rank);
    return m;
}

std::size_t int_rank(IntMat m) {
    if (m.empty()) return 0;
    return echelonize(m, m[0].size());
}

IntMat integer_kernel(const IntMat& m, std::size_t cols) {
    const std::size_t nrows = m.size();
    // Work on [m^T | I]: after echelonizing the m^T block, the rows with a
    // zero prefix carry a lattice basis of the kernel in the identity part.
    IntMat work(cols, IntRow(nrows + cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < nrows; ++i) {
            if (m[i].size() != cols)
                fail(errc::shape_mismatch, "integer_kernel: ragged matrix");
            work[j][i] = m[i][j];
        }
        work[j][nrows + j] = 1;
    }
    std::size_t rank = echelonize(work, nrows);
    IntMat kernel;
    for (std::size_t j = rank; j < cols; ++j)
        kernel.emplace_back(work[j].begin() + static_cast<std::ptrdiff_t>(nrows),
                            work[j].end());
    return hnf_rows(std::move(kernel));
}

} // namespace toric
