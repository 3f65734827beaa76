#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/indispensable.hpp"

namespace toric {

enum class Format { text, json };

// Matrix file format: first line "d r", then d lines of r whitespace
// separated nonnegative integers.
ModelMatrix parse_matrix(std::istream& in);
ModelMatrix parse_matrix_file(const std::string& path);

// Raw integer matrix in the same "n r" + rows format (used for explicit
// order matrices, which may have negative entries).
IntMat parse_int_matrix(std::istream& in);
IntMat parse_int_matrix_file(const std::string& path);

// One line of whitespace separated nonnegative integers.
Degree parse_degree(const std::string& text, std::size_t expected_len);

// Kronecker stack specification, e.g. "ones(2)*id(4)*id(2);id(4)*ones(2)*id(2)":
// stack rows separated by ';', factors by '*', each factor ones(k) (the
// 1 x k all-ones row) or id(k) (the k x k identity).
struct KroneckerFactor {
    bool ones = false; // ones(k) if true, id(k) otherwise
    std::size_t size = 0;
};
using KroneckerSpec = std::vector<std::vector<KroneckerFactor>>;

KroneckerSpec parse_kronecker(const std::string& text);
ModelMatrix build_kronecker(const KroneckerSpec& spec);

// Named builtin fixtures ("paper-example": the 16x16 binary marginal
// independence model ones(2)*id(4)*id(2) ; id(4)*ones(2)*id(2)).
ModelMatrix builtin_model(const std::string& name);

// All emitters produce deterministic, canonically sorted output: given
// the same mathematical object they return identical bytes regardless of
// the order the object was assembled in.
std::string emit_matrix(const ModelMatrix& model, Format format);
std::string emit_fiber(const Fiber& fiber, Format format);
std::string emit_nabla(const NablaComplex& nabla, Format format);
std::string emit_degree_reports(const std::vector<DegreeReport>& reports,
                                Format format);
std::string emit_binomials(const Weights& weights, std::vector<Binomial> binomials,
                           Format format);
std::string emit_monomials(const Weights& weights, std::vector<Exponents> monomials,
                           Format format);
std::string emit_grobner(const ModelMatrix& model, const GrobnerBasis& basis,
                         Format format);
std::string emit_verdict(const UniquenessResult& result, Format format);
std::string emit_markov(const MarkovBasis& basis, const Weights& weights,
                        Format format);

} // namespace toric

#endif
