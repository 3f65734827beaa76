#ifndef TORIC_MONOMIAL_HPP
#define TORIC_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "toric/model.hpp"
#include "toric/vec.hpp"

namespace toric {

// Pure-difference binomial X^plus - X^minus with A*plus = A*minus.
// Storage orientation is canonical: plus is the graded-lex greater side,
// so set membership of binomials is independent of any term order.
struct Binomial {
    Exponents plus;
    Exponents minus;
    Degree degree;

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

// Componentwise minimum ("gcd of the monomials in F"). Throws on empty F.
Exponents gcd_monomials(const std::vector<Exponents>& F);

// Indices of the nonzero entries (0-based).
std::vector<std::size_t> support(const Exponents& u);

bool divides(const Exponents& a, const Exponents& b); // a | b componentwise

// Builds the canonical binomial X^u - X^v; requires u != v and equal
// multidegree under the model.
Binomial make_binomial(const ModelMatrix& model, const Exponents& u,
                       const Exponents& v);

// X^{w_+} - X^{w_-} for an integer kernel vector w (A*w = 0, w != 0).
Binomial binomial_from_vector(const ModelMatrix& model, const IntRow& w);

// Divides both sides by gcd(plus, minus); the result has coprime parts.
Binomial divide_binomial_by_gcd(const ModelMatrix& model, const Binomial& b);

// Canonical ordering used whenever monomial or binomial collections are
// sorted for storage, comparison, or output: ascending weighted degree,
// then descending lexicographic (so x1 sorts before x2).
bool monomial_canonical_less(const Weights& w, const Exponents& a,
                             const Exponents& b);
bool binomial_canonical_less(const Weights& w, const Binomial& a,
                             const Binomial& b);

// Sorts canonically and drops duplicates.
void canonicalize_monomial_set(const Weights& w, std::vector<Exponents>& set);
void canonicalize_binomial_set(const Weights& w, std::vector<Binomial>& set);

// "x3^2*x7": 1-based indices in increasing order, exponent omitted when 1,
// empty product rendered "1".
std::string render_monomial(const Exponents& u);
std::string render_binomial(const Binomial& b); // "plus - minus"

} // namespace toric

#endif
