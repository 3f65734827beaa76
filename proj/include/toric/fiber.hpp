#ifndef TORIC_FIBER_HPP
#define TORIC_FIBER_HPP

#include <cstddef>
#include <vector>

#include "toric/model.hpp"
#include "toric/monomial.hpp"

namespace toric {

inline constexpr std::size_t default_fiber_cap = 1000000;

// All monomials of one multidegree, canonically sorted and duplicate-free.
struct Fiber {
    Degree degree;
    std::vector<Exponents> monomials;
};

// The simplicial complex on a fiber whose faces are the monomial subsets
// with nontrivial gcd, stored as its 1-skeleton: edge {i,j} iff
// gcd(monomial_i, monomial_j) != 1, equivalently the supports intersect.
// Higher faces are answered by on-demand gcd queries.
struct NablaComplex {
    Fiber fiber;
    std::vector<std::vector<std::size_t>> adjacency; // sorted neighbor lists
};

// Depth-first enumeration of {u >= 0 : A*u = a} with residual pruning.
// Throws fiber_cap_exceeded when more than `cap` monomials are found.
Fiber enumerate_fiber(const ModelMatrix& model, const Degree& a,
                      std::size_t cap = default_fiber_cap);

NablaComplex build_nabla(Fiber fiber);

// gcd(F) != 1, i.e. F is a face of the complex. Throws on empty F.
bool is_face(const std::vector<Exponents>& F);

// Components of the 1-skeleton (which carries the same component
// structure as the full complex). Each component lists fiber indices in
// increasing order; components ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const NablaComplex& nabla);

std::vector<Exponents> isolated_vertices(const NablaComplex& nabla);

// True iff gcd(u,v,w) != gcd(u,v) for every other fiber monomial w, i.e.
// no 2-face of the complex containing {u,v} preserves the pair's gcd.
// Requires {u,v} to be a 1-face of the fiber's complex.
bool triple_condition(const Exponents& u, const Exponents& v, const Fiber& fiber);

} // namespace toric

#endif
