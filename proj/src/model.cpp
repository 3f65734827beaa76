#include "toric/model.hpp"

#include <string>

namespace toric {

ModelMatrix validate_model(const IntMat& raw) {
    if (raw.empty() || raw[0].empty())
        fail(errc::empty_matrix, "model matrix must have at least one row and column");
    ModelMatrix model;
    model.d = raw.size();
    model.r = raw[0].size();
    for (std::size_t i = 0; i < model.d; ++i) {
        if (raw[i].size() != model.r)
            fail(errc::shape_mismatch,
                 "row " + std::to_string(i + 1) + " has length " +
                     std::to_string(raw[i].size()) + ", expected " +
                     std::to_string(model.r));
        for (std::size_t j = 0; j < model.r; ++j)
            if (raw[i][j] < 0)
                fail(errc::negative_entry,
                     "negative entry at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
    }
    model.rows = raw;
    model.weights.assign(model.r, 0);
    for (std::size_t j = 0; j < model.r; ++j) {
        for (std::size_t i = 0; i < model.d; ++i)
            model.weights[j] += raw[i][j];
        if (model.weights[j] == 0)
            fail(errc::zero_column, "column " + std::to_string(j + 1) + " is zero");
    }
    return model;
}

Degree degree_of(const ModelMatrix& model, const Exponents& u) {
    if (u.size() != model.r)
        fail(errc::length_mismatch,
             "exponent vector has length " + std::to_string(u.size()) +
                 ", expected " + std::to_string(model.r));
    Degree a(model.d, 0);
    for (std::size_t i = 0; i < model.d; ++i)
        for (std::size_t j = 0; j < model.r; ++j)
            if (model.rows[i][j] != 0 && u[j] != 0)
                a[i] += model.rows[i][j] * u[j];
    return a;
}

Int weighted_degree(const ModelMatrix& model, const Exponents& u) {
    return dot(model.weights, u);
}

LatticeBasis lattice_kernel(const ModelMatrix& model) {
    return integer_kernel(model.rows, model.r);
}

ModelMatrix lawrence_lift(const ModelMatrix& model) {
    const std::size_t d = model.d, r = model.r;
    IntMat lift(d + r, IntRow(2 * r, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < r; ++j)
            lift[i][j] = model.rows[i][j];
    for (std::size_t j = 0; j < r; ++j) {
        lift[d + j][j] = 1;
        lift[d + j][r + j] = 1;
    }
    return validate_model(lift);
}

namespace detail {

bool residue_unreachable(const ModelMatrix& model, const Degree& residue,
                         std::size_t var) {
    IntRow bounds(model.r - var, 0);
    for (std::size_t j = var; j < model.r; ++j) {
        Int b(-1);
        for (std::size_t i = 0; i < model.d; ++i) {
            if (model.rows[i][j] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), residue[i].get_mpz_t(),
                       model.rows[i][j].get_mpz_t());
            if (b < 0 || q < b) b = q;
        }
        bounds[j - var] = b; // finite: no zero columns
    }
    for (std::size_t i = 0; i < model.d; ++i) {
        if (residue[i] == 0) continue;
        Int capacity = 0;
        for (std::size_t j = var; j < model.r; ++j)
            if (model.rows[i][j] != 0)
                capacity += model.rows[i][j] * bounds[j - var];
        if (capacity < residue[i]) return true;
    }
    return false;
}

} // namespace detail

namespace {

// Early-exit search for a nonnegative integer solution of A*u = a.
bool has_factorization(const ModelMatrix& model, Degree residue,
                       std::size_t var) {
    if (is_zero(residue)) return true; // pad remaining variables with zero
    if (var == model.r) return false;
    if (var + 1 == model.r) {
        // the last variable is determined by any row with a positive entry
        std::size_t pivot = model.d;
        for (std::size_t i = 0; i < model.d; ++i)
            if (model.rows[i][var] != 0) {
                pivot = i;
                break;
            }
        Int k, rem;
        mpz_fdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), residue[pivot].get_mpz_t(),
                    model.rows[pivot][var].get_mpz_t());
        if (rem != 0) return false;
        for (std::size_t i = 0; i < model.d; ++i)
            if (residue[i] != model.rows[i][var] * k) return false;
        return true;
    }
    if (detail::residue_unreachable(model, residue, var)) return false;
    Int bound(-1);
    for (std::size_t i = 0; i < model.d; ++i) {
        if (model.rows[i][var] == 0) continue;
        Int b;
        mpz_fdiv_q(b.get_mpz_t(), residue[i].get_mpz_t(),
                   model.rows[i][var].get_mpz_t());
        if (bound < 0 || b < bound) bound = b;
    }
    for (Int k = 0; k <= bound; ++k) {
        if (has_factorization(model, residue, var + 1)) return true;
        for (std::size_t i = 0; i < model.d; ++i)
            residue[i] -= model.rows[i][var];
    }
    return false;
}

} // namespace

bool degree_leq(const ModelMatrix& model, const Degree& b, const Degree& a) {
    if (a.size() != model.d || b.size() != model.d)
        fail(errc::length_mismatch, "degree length differs from model dimension");
    Degree diff = vec_sub(a, b);
    if (!all_nonnegative(diff)) return false;
    return has_factorization(model, std::move(diff), 0);
}

} // namespace toric
