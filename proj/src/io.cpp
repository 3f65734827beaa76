#include "toric/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace toric {

using json = nlohmann::ordered_json;

namespace {

json json_int(const Int& x) {
    if (x.fits_slong_p()) return static_cast<long>(x.get_si());
    return x.get_str(); // beyond 64 bits: decimal string
}

json json_vec(const IntRow& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

json json_mat(const IntMat& m) {
    json arr = json::array();
    for (const IntRow& row : m) arr.push_back(json_vec(row));
    return arr;
}

json json_binomial(const Exponents& plus, const Exponents& minus) {
    return json{{"plus", json_vec(plus)}, {"minus", json_vec(minus)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const IntRow& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

Int parse_int_token(const std::string& token, std::size_t line, std::size_t col) {
    try {
        return Int(token);
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "line " + std::to_string(line) + ", entry " +
                                    std::to_string(col) + ": '" + token +
                                    "' is not an integer");
    }
}

IntMat parse_grid(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_tokens = [&](std::vector<std::string>& tokens) {
        tokens.clear();
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> tokens;
    if (!next_tokens(tokens))
        fail(errc::parse_error, "empty input, expected 'd r' header");
    if (tokens.size() != 2)
        fail(errc::parse_error, "line " + std::to_string(lineno) +
                                    ": header must be exactly 'd r'");
    Int d = parse_int_token(tokens[0], lineno, 1);
    Int r = parse_int_token(tokens[1], lineno, 2);
    if (d <= 0 || r <= 0)
        fail(errc::parse_error, "line " + std::to_string(lineno) +
                                    ": dimensions must be positive");
    if (!d.fits_ulong_p() || !r.fits_ulong_p())
        fail(errc::parse_error, "matrix dimensions out of range");
    const std::size_t nrows = d.get_ui(), ncols = r.get_ui();
    IntMat grid;
    grid.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!next_tokens(tokens))
            fail(errc::parse_error, "unexpected end of input: expected " +
                                        std::to_string(nrows) + " rows, got " +
                                        std::to_string(i));
        if (tokens.size() != ncols)
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(ncols) + " entries, got " +
                                        std::to_string(tokens.size()));
        IntRow row;
        row.reserve(ncols);
        for (std::size_t j = 0; j < ncols; ++j)
            row.push_back(parse_int_token(tokens[j], lineno, j + 1));
        grid.push_back(std::move(row));
    }
    if (next_tokens(tokens))
        fail(errc::parse_error,
             "line " + std::to_string(lineno) + ": trailing content after matrix");
    return grid;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::parse_error, "cannot open '" + path + "'");
    return in;
}

} // namespace

ModelMatrix parse_matrix(std::istream& in) { return validate_model(parse_grid(in)); }

ModelMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in = open_file(path);
    return parse_matrix(in);
}

IntMat parse_int_matrix(std::istream& in) { return parse_grid(in); }

IntMat parse_int_matrix_file(const std::string& path) {
    std::ifstream in = open_file(path);
    return parse_int_matrix(in);
}

Degree parse_degree(const std::string& text, std::size_t expected_len) {
    std::istringstream in(text);
    std::string tok;
    Degree degree;
    while (in >> tok) degree.push_back(parse_int_token(tok, 1, degree.size() + 1));
    if (degree.size() != expected_len)
        fail(errc::length_mismatch, "degree has " + std::to_string(degree.size()) +
                                        " coordinates, expected " +
                                        std::to_string(expected_len));
    for (const Int& x : degree)
        if (x < 0) fail(errc::negative_entry, "degree coordinates must be nonnegative");
    return degree;
}

KroneckerSpec parse_kronecker(const std::string& text) {
    KroneckerSpec spec;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    std::istringstream rows(cleaned);
    std::string row_text;
    while (std::getline(rows, row_text, ';')) {
        std::vector<KroneckerFactor> factors;
        std::istringstream parts(row_text);
        std::string tok;
        while (std::getline(parts, tok, '*')) {
            KroneckerFactor f;
            std::string arg;
            if (tok.rfind("ones(", 0) == 0 && tok.back() == ')') {
                f.ones = true;
                arg = tok.substr(5, tok.size() - 6);
            } else if (tok.rfind("id(", 0) == 0 && tok.back() == ')') {
                arg = tok.substr(3, tok.size() - 4);
            } else if (tok.rfind("identity(", 0) == 0 && tok.back() == ')') {
                arg = tok.substr(9, tok.size() - 10);
            } else {
                fail(errc::parse_error,
                     "bad kronecker factor '" + tok + "', expected ones(k) or id(k)");
            }
            Int k = parse_int_token(arg, 1, 1);
            if (k <= 0 || !k.fits_ulong_p())
                fail(errc::parse_error, "bad factor size in '" + tok + "'");
            f.size = k.get_ui();
            factors.push_back(f);
        }
        if (factors.empty())
            fail(errc::parse_error, "empty kronecker product in spec");
        spec.push_back(std::move(factors));
    }
    if (spec.empty())
        fail(errc::parse_error, "empty kronecker spec");
    return spec;
}

namespace {

IntMat factor_matrix(const KroneckerFactor& f) {
    if (f.ones) return IntMat{IntRow(f.size, 1)};
    IntMat id(f.size, IntRow(f.size, 0));
    for (std::size_t i = 0; i < f.size; ++i) id[i][i] = 1;
    return id;
}

IntMat kron(const IntMat& a, const IntMat& b) {
    const std::size_t am = a.size(), an = a[0].size();
    const std::size_t bm = b.size(), bn = b[0].size();
    IntMat c(am * bm, IntRow(an * bn, 0));
    for (std::size_t i = 0; i < am; ++i)
        for (std::size_t j = 0; j < an; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t s = 0; s < bm; ++s)
                for (std::size_t t = 0; t < bn; ++t)
                    c[i * bm + s][j * bn + t] = a[i][j] * b[s][t];
        }
    return c;
}

} // namespace

ModelMatrix build_kronecker(const KroneckerSpec& spec) {
    IntMat stacked;
    std::size_t ncols = 0;
    for (const auto& factors : spec) {
        if (factors.empty())
            fail(errc::parse_error, "empty kronecker product in spec");
        IntMat block = factor_matrix(factors[0]);
        for (std::size_t k = 1; k < factors.size(); ++k)
            block = kron(block, factor_matrix(factors[k]));
        if (stacked.empty())
            ncols = block[0].size();
        else if (block[0].size() != ncols)
            fail(errc::shape_mismatch,
                 "kronecker stack rows have different column counts");
        for (IntRow& row : block) stacked.push_back(std::move(row));
    }
    return validate_model(stacked);
}

ModelMatrix builtin_model(const std::string& name) {
    if (name == "paper-example")
        return build_kronecker(
            parse_kronecker("ones(2)*id(4)*id(2);id(4)*ones(2)*id(2)"));
    fail(errc::parse_error, "unknown builtin model '" + name + "'");
}

std::string emit_matrix(const ModelMatrix& model, Format format) {
    if (format == Format::json) {
        json j{{"d", model.d},
               {"r", model.r},
               {"rows", json_mat(model.rows)},
               {"grading", json_vec(model.weights)}};
        return dump(j);
    }
    std::string out = std::to_string(model.d) + " " + std::to_string(model.r) + "\n";
    for (const IntRow& row : model.rows) out += join_ints(row) + "\n";
    return out;
}

std::string emit_fiber(const Fiber& fiber, Format format) {
    if (format == Format::json) {
        json j{{"degree", json_vec(fiber.degree)},
               {"size", fiber.monomials.size()},
               {"monomials", json_mat(fiber.monomials)}};
        return dump(j);
    }
    std::string out;
    for (const Exponents& m : fiber.monomials) out += render_monomial(m) + "\n";
    return out;
}

std::string emit_nabla(const NablaComplex& nabla, Format format) {
    std::vector<std::vector<std::size_t>> comps = connected_components(nabla);
    if (format == Format::json) {
        json edges = json::array();
        for (std::size_t i = 0; i < nabla.adjacency.size(); ++i)
            for (std::size_t j : nabla.adjacency[i])
                if (i < j) edges.push_back(json::array({i, j}));
        json components = json::array();
        for (const auto& comp : comps) components.push_back(comp);
        json j{{"degree", json_vec(nabla.fiber.degree)},
               {"monomials", json_mat(nabla.fiber.monomials)},
               {"edges", edges},
               {"components", components}};
        return dump(j);
    }
    std::string out = "degree: " + join_ints(nabla.fiber.degree) + "\n";
    out += "monomials (" + std::to_string(nabla.fiber.monomials.size()) + "):\n";
    for (const Exponents& m : nabla.fiber.monomials)
        out += "  " + render_monomial(m) + "\n";
    std::size_t nedges = 0;
    std::string edge_lines;
    for (std::size_t i = 0; i < nabla.adjacency.size(); ++i)
        for (std::size_t j : nabla.adjacency[i])
            if (i < j) {
                ++nedges;
                edge_lines += "  " + std::to_string(i + 1) + " " +
                              std::to_string(j + 1) + "\n";
            }
    out += "edges (" + std::to_string(nedges) + "), 1-based monomial indices:\n";
    out += edge_lines;
    out += "components (" + std::to_string(comps.size()) + "):\n";
    for (const auto& comp : comps) {
        out += " ";
        for (std::size_t v : comp) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    return out;
}

std::string emit_degree_reports(const std::vector<DegreeReport>& reports,
                                Format format) {
    if (format == Format::json) {
        json arr = json::array();
        for (const DegreeReport& rep : reports)
            arr.push_back(json{{"degree", json_vec(rep.degree)},
                               {"fiber_size", rep.fiber_size},
                               {"components", rep.component_count},
                               {"minimal", rep.minimal},
                               {"indispensable", rep.indispensable},
                               {"quasi_indispensable", rep.quasi_indispensable}});
        return dump(arr);
    }
    std::string out;
    for (const DegreeReport& rep : reports) {
        out += "degree [" + join_ints(rep.degree) + "]";
        out += " fiber=" + std::to_string(rep.fiber_size);
        out += " components=" + std::to_string(rep.component_count);
        out += rep.minimal ? " minimal" : "";
        out += rep.indispensable ? " indispensable" : "";
        out += rep.quasi_indispensable ? " quasi-indispensable" : "";
        out += "\n";
    }
    return out;
}

std::string emit_binomials(const Weights& weights, std::vector<Binomial> binomials,
                           Format format) {
    canonicalize_binomial_set(weights, binomials);
    if (format == Format::json) {
        json arr = json::array();
        for (const Binomial& b : binomials)
            arr.push_back(json_binomial(b.plus, b.minus));
        return dump(json{{"binomials", arr}});
    }
    std::string out;
    for (const Binomial& b : binomials) out += render_binomial(b) + "\n";
    return out;
}

std::string emit_monomials(const Weights& weights, std::vector<Exponents> monomials,
                           Format format) {
    canonicalize_monomial_set(weights, monomials);
    if (format == Format::json) {
        return dump(json{{"monomials", json_mat(monomials)}});
    }
    std::string out;
    for (const Exponents& m : monomials) out += render_monomial(m) + "\n";
    return out;
}

std::string emit_grobner(const ModelMatrix& model, const GrobnerBasis& basis,
                         Format format) {
    (void)model;
    if (format == Format::json) {
        json arr = json::array();
        for (const OrientedBinomial& e : basis.elements)
            arr.push_back(json_binomial(e.lead, e.trail));
        json j{{"order", json_mat(basis.order.rows)},
               {"reduced", basis.reduced},
               {"binomials", arr}};
        return dump(j);
    }
    std::string out;
    for (const OrientedBinomial& e : basis.elements)
        out += render_monomial(e.lead) + " - " + render_monomial(e.trail) + "\n";
    return out;
}

std::string emit_verdict(const UniquenessResult& result, Format format) {
    const bool unique = result.verdict == Verdict::unique;
    if (format == Format::json) {
        json j{{"verdict", unique ? "UNIQUE" : "NOT_UNIQUE"}};
        j["witness"] = result.witness ? json_vec(*result.witness) : json(nullptr);
        return dump(j);
    }
    std::string out = unique ? "UNIQUE\n" : "NOT_UNIQUE\n";
    if (result.witness)
        out += "witness degree: " + join_ints(*result.witness) + "\n";
    return out;
}

std::string emit_markov(const MarkovBasis& basis, const Weights& weights,
                        Format format) {
    if (format == Format::json) {
        json arr = json::array();
        std::vector<Binomial> sorted = basis.binomials;
        canonicalize_binomial_set(weights, sorted);
        for (const Binomial& b : sorted) arr.push_back(json_binomial(b.plus, b.minus));
        json degs = json::array();
        for (const Degree& d : basis.degrees) degs.push_back(json_vec(d));
        return dump(json{{"binomials", arr}, {"degrees", degs}});
    }
    return emit_binomials(weights, basis.binomials, format);
}

} // namespace toric
