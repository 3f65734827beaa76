#ifndef TORIC_VEC_HPP
#define TORIC_VEC_HPP

#include <cstddef>
#include <gmpxx.h>
#include <vector>

#include "toric/error.hpp"

namespace toric {

// All integer arithmetic is arbitrary precision.
using Int = mpz_class;

using IntRow = std::vector<Int>;
using IntMat = std::vector<IntRow>;

// Exponent vector of a monomial X^u (length r, entries >= 0).
using Exponents = IntRow;
// Element of N^d: the multidegree A*u of a monomial.
using Degree = IntRow;
// Positive grading weights d_1..d_r (here: column sums of the model matrix).
using Weights = IntRow;

inline Int dot(const IntRow& a, const IntRow& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "dot: vector lengths differ");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntRow vec_add(const IntRow& a, const IntRow& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "vec_add: vector lengths differ");
    IntRow c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline IntRow vec_sub(const IntRow& a, const IntRow& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "vec_sub: vector lengths differ");
    IntRow c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline bool is_zero(const IntRow& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

inline bool all_nonnegative(const IntRow& a) {
    for (const Int& x : a)
        if (x < 0) return false;
    return true;
}

// -1 / 0 / +1, plain lexicographic comparison.
inline int lex_cmp(const IntRow& a, const IntRow& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "lex_cmp: vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// Graded-lex comparison: weighted degree first, then lexicographic.
inline int glex_cmp(const Weights& w, const Exponents& a, const Exponents& b) {
    Int da = dot(w, a), db = dot(w, b);
    if (da != db) return da < db ? -1 : 1;
    return lex_cmp(a, b);
}

} // namespace toric

#endif
