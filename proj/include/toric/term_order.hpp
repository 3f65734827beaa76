#ifndef TORIC_TERM_ORDER_HPP
#define TORIC_TERM_ORDER_HPP

#include <cstddef>
#include <optional>

#include "toric/vec.hpp"

namespace toric {

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Matrix-defined term order: u < v iff the first nonzero entry of
// rows*(v-u) is positive. Valid orders have rows of full rank r (so
// compare is total on distinct monomials) and, for every unit vector e_j,
// a positive first nonzero entry in rows*e_j (so 1 is the minimum).
struct TermOrder {
    IntMat rows;
    std::size_t nvars = 0;
    // Set for the degrevlex-lowest family; the variable made cheapest.
    std::optional<std::size_t> lowest;
};

// The degree reverse lexicographic order with X_var as lowest variable
// (0-based var): first row the grading weights, second row -e_var, then
// reversed negated unit rows skipping var until the matrix has r rows.
TermOrder degrevlex_lowest(std::size_t var, const Weights& weights);

TermOrder order_from_rows(IntMat rows); // validates, throws not_a_term_order

Cmp compare(const Exponents& u, const Exponents& v, const TermOrder& ord);

bool is_term_order(const TermOrder& ord);

} // namespace toric

#endif
