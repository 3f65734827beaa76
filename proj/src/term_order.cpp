#include "toric/term_order.hpp"

#include <string>

#include "toric/linalg.hpp"

namespace toric {

TermOrder degrevlex_lowest(std::size_t var, const Weights& weights) {
    const std::size_t r = weights.size();
    if (var >= r)
        fail(errc::index_out_of_range,
             "lowest variable index " + std::to_string(var + 1) +
                 " out of range 1.." + std::to_string(r));
    TermOrder ord;
    ord.nvars = r;
    ord.lowest = var;
    ord.rows.push_back(weights);
    IntRow unit(r, 0);
    unit[var] = -1;
    ord.rows.push_back(unit);
    for (std::size_t k = r; k-- > 0 && ord.rows.size() < r;) {
        if (k == var) continue;
        IntRow row(r, 0);
        row[k] = -1;
        ord.rows.push_back(std::move(row));
    }
    return ord;
}

TermOrder order_from_rows(IntMat rows) {
    TermOrder ord;
    ord.nvars = rows.empty() ? 0 : rows[0].size();
    ord.rows = std::move(rows);
    if (!is_term_order(ord))
        fail(errc::not_a_term_order, "matrix does not define a term order");
    return ord;
}

Cmp compare(const Exponents& u, const Exponents& v, const TermOrder& ord) {
    if (u.size() != ord.nvars || v.size() != ord.nvars)
        fail(errc::length_mismatch, "compare: exponent length differs from order");
    for (const IntRow& row : ord.rows) {
        Int s = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) s += row[i] * (u[i] - v[i]);
        if (s != 0) return s > 0 ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
}

bool is_term_order(const TermOrder& ord) {
    if (ord.nvars == 0 || ord.rows.empty()) return false;
    for (const IntRow& row : ord.rows)
        if (row.size() != ord.nvars) return false;
    // every variable must compare above 1
    for (std::size_t j = 0; j < ord.nvars; ++j) {
        int sign = 0;
        for (const IntRow& row : ord.rows) {
            if (row[j] != 0) {
                sign = row[j] > 0 ? 1 : -1;
                break;
            }
        }
        if (sign <= 0) return false;
    }
    return int_rank(ord.rows) == ord.nvars;
}

} // namespace toric
