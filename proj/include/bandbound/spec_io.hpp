#pragma once

#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bandbound/builders.hpp"
#include "bandbound/symbol.hpp"

namespace bandbound {

/// User-facing description of an operator: a periodic Jacobi chain, a 2D
/// periodic Schrodinger lattice, or a raw symbol. Complex numbers are
/// [re, im] pairs, matrices row-major nested arrays.
struct OperatorSpec {
    enum class Type { jacobi1d, schrodinger2d, symbol };

    Type type = Type::symbol;
    std::optional<JacobiSpec> jacobi;
    std::optional<Schrodinger2DSpec> schrodinger;
    std::optional<FourierSymbol> raw_symbol;
    std::optional<std::pair<double, double>> restriction;  // jacobi1d only, inside [0, pi]
};

namespace io_detail {

using nlohmann::json;

inline const json& require_field(const json& j, const char* field) {
    if (!j.contains(field))
        throw std::invalid_argument(std::string("spec: missing field '") + field + "'");
    return j.at(field);
}

inline int parse_positive_int(const json& j, const char* field) {
    const json& v = require_field(j, field);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw std::invalid_argument(std::string("spec: field '") + field + "' must be a positive integer");
    return v.get<int>();
}

inline Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("spec: " + where + " must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

inline ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("spec: " + where + " must be a nonempty nested array");
    const int dim = static_cast<int>(j.size());
    ComplexMatrix m(dim);
    for (int row = 0; row < dim; ++row) {
        const json& r = j[static_cast<std::size_t>(row)];
        if (!r.is_array() || static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("spec: " + where + " must be square (row " + std::to_string(row + 1) + ")");
        for (int col = 0; col < dim; ++col)
            m(row, col) = parse_complex(r[static_cast<std::size_t>(col)],
                                        where + "[" + std::to_string(row + 1) + "][" + std::to_string(col + 1) + "]");
    }
    return m;
}

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<ComplexMatrix> parse_matrix_list(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string("spec: field '") + field + "' must be a nonempty array of matrices");
    std::vector<ComplexMatrix> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_matrix(j[i], std::string(field) + "[" + std::to_string(i + 1) + "]"));
    return out;
}

inline FourierSymbol parse_raw_symbol(const json& j) {
    const int dim_k = parse_positive_int(j, "dim_k");

    FourierSymbol sym;
    if (j.contains("domain")) {
        const json& dom = j.at("domain");
        if (!dom.is_array() || static_cast<int>(dom.size()) != dim_k)
            throw std::invalid_argument("spec: field 'domain' must list one [lo, hi] interval per k-axis");
        for (const json& interval : dom) {
            if (!interval.is_array() || interval.size() != 2 || !interval[0].is_number() || !interval[1].is_number())
                throw std::invalid_argument("spec: 'domain' entries must be [lo, hi] number pairs");
            sym.domain.lower.push_back(interval[0].get<double>());
            sym.domain.upper.push_back(interval[1].get<double>());
        }
    } else {
        sym.domain.lower.assign(static_cast<std::size_t>(dim_k), 0.0);
        sym.domain.upper.assign(static_cast<std::size_t>(dim_k), kTwoPi);
    }
    sym.domain.grid_points = j.contains("grid") ? parse_positive_int(j, "grid") : default_grid_points(dim_k);
    sym.domain.validate();

    sym.constant_part = parse_matrix(require_field(j, "H0"), "H0");

    const json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("spec: field 'terms' must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const json& term = terms[t];
        const std::string where = "terms[" + std::to_string(t + 1) + "]";
        SymbolTerm out;
        out.matrix = parse_matrix(require_field(term, "A"), where + ".A");
        if (term.contains("freq")) {
            const json& freq = term.at("freq");
            if (!freq.is_array() || static_cast<int>(freq.size()) != dim_k)
                throw std::invalid_argument("spec: " + where + ".freq must list one integer per k-axis");
            std::vector<int> frequency;
            for (const json& f : freq) {
                if (!f.is_number_integer())
                    throw std::invalid_argument("spec: " + where + ".freq entries must be integers");
                frequency.push_back(f.get<int>());
            }
            const Complex coeff = term.contains("coeff") ? parse_complex(term.at("coeff"), where + ".coeff")
                                                         : Complex(1.0);
            out.phi = PhiFunction::harmonic(std::move(frequency), coeff);
        } else if (term.contains("values")) {
            const json& values = term.at("values");
            if (!values.is_array())
                throw std::invalid_argument("spec: " + where + ".values must be an array of [re, im] pairs");
            std::vector<Complex> samples;
            samples.reserve(values.size());
            for (std::size_t i = 0; i < values.size(); ++i)
                samples.push_back(parse_complex(values[i], where + ".values[" + std::to_string(i + 1) + "]"));
            out.phi = PhiFunction::sampled(std::move(samples));
        } else {
            throw std::invalid_argument("spec: " + where + " needs either 'freq' (harmonic) or 'values' (sampled)");
        }
        sym.terms.push_back(std::move(out));
    }
    validate_symbol(sym);
    return sym;
}

}  // namespace io_detail

inline OperatorSpec parse_operator_spec(const nlohmann::json& j) {
    using io_detail::require_field;
    if (!j.is_object()) throw std::invalid_argument("spec: top level must be a JSON object");
    const std::string type = require_field(j, "type").get<std::string>();

    OperatorSpec spec;
    if (type == "jacobi1d") {
        spec.type = OperatorSpec::Type::jacobi1d;
        JacobiSpec jac;
        jac.period = io_detail::parse_positive_int(j, "period");
        jac.block_dim = io_detail::parse_positive_int(j, "block_dim");
        jac.a = io_detail::parse_matrix_list(require_field(j, "a"), "a");
        jac.b = io_detail::parse_matrix_list(require_field(j, "b"), "b");
        jac.validate();
        spec.jacobi = std::move(jac);
        if (j.contains("restrict")) {
            const nlohmann::json& r = j.at("restrict");
            if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
                throw std::invalid_argument("spec: field 'restrict' must be an [alpha, beta] pair");
            const double lo = r[0].get<double>();
            const double hi = r[1].get<double>();
            if (!(lo >= 0.0) || !(lo < hi) || !(hi <= std::numbers::pi + 1e-12))
                throw std::invalid_argument("spec: 'restrict' must satisfy 0 <= alpha < beta <= pi");
            spec.restriction = {lo, hi};
        }
    } else if (type == "schrodinger2d") {
        spec.type = OperatorSpec::Type::schrodinger2d;
        Schrodinger2DSpec sch;
        sch.period_n = io_detail::parse_positive_int(j, "N");
        sch.period_m = io_detail::parse_positive_int(j, "M");
        const nlohmann::json& q = require_field(j, "q");
        if (!q.is_array()) throw std::invalid_argument("spec: field 'q' must be an array of rows");
        for (std::size_t row = 0; row < q.size(); ++row) {
            const nlohmann::json& r = q[row];
            if (!r.is_array())
                throw std::invalid_argument("spec: q row " + std::to_string(row + 1) + " must be an array");
            std::vector<double> vals;
            for (const nlohmann::json& v : r) {
                if (!v.is_number())
                    throw std::invalid_argument("spec: q row " + std::to_string(row + 1) + " entries must be numbers");
                vals.push_back(v.get<double>());
            }
            sch.q.push_back(std::move(vals));
        }
        sch.validate();
        spec.schrodinger = std::move(sch);
    } else if (type == "symbol") {
        spec.type = OperatorSpec::Type::symbol;
        spec.raw_symbol = io_detail::parse_raw_symbol(j);
    } else {
        throw std::invalid_argument("spec: unknown type '" + type + "' (expected jacobi1d, schrodinger2d, or symbol)");
    }
    return spec;
}

inline OperatorSpec parse_operator_spec_text(const std::string& text) {
    return parse_operator_spec(nlohmann::json::parse(text));
}

inline OperatorSpec load_operator_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("spec: cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_operator_spec_text(buffer.str());
}

inline nlohmann::json operator_spec_to_json(const OperatorSpec& spec) {
    using io_detail::complex_to_json;
    using io_detail::matrix_to_json;
    nlohmann::json j;
    switch (spec.type) {
        case OperatorSpec::Type::jacobi1d: {
            const JacobiSpec& jac = spec.jacobi.value();
            j["type"] = "jacobi1d";
            j["period"] = jac.period;
            j["block_dim"] = jac.block_dim;
            nlohmann::json a = nlohmann::json::array();
            nlohmann::json b = nlohmann::json::array();
            for (const ComplexMatrix& m : jac.a) a.push_back(matrix_to_json(m));
            for (const ComplexMatrix& m : jac.b) b.push_back(matrix_to_json(m));
            j["a"] = std::move(a);
            j["b"] = std::move(b);
            if (spec.restriction) j["restrict"] = {spec.restriction->first, spec.restriction->second};
            break;
        }
        case OperatorSpec::Type::schrodinger2d: {
            const Schrodinger2DSpec& sch = spec.schrodinger.value();
            j["type"] = "schrodinger2d";
            j["N"] = sch.period_n;
            j["M"] = sch.period_m;
            j["q"] = sch.q;
            break;
        }
        case OperatorSpec::Type::symbol: {
            const FourierSymbol& sym = spec.raw_symbol.value();
            j["type"] = "symbol";
            j["dim_k"] = sym.domain.dim();
            nlohmann::json domain = nlohmann::json::array();
            for (int axis = 0; axis < sym.domain.dim(); ++axis)
                domain.push_back({sym.domain.lower[static_cast<std::size_t>(axis)],
                                  sym.domain.upper[static_cast<std::size_t>(axis)]});
            j["domain"] = std::move(domain);
            j["grid"] = sym.domain.grid_points;
            j["H0"] = matrix_to_json(sym.constant_part);
            nlohmann::json terms = nlohmann::json::array();
            for (const SymbolTerm& term : sym.terms) {
                nlohmann::json t;
                if (term.phi.kind == PhiFunction::Kind::fourier) {
                    t["freq"] = term.phi.frequency;
                    t["coeff"] = complex_to_json(term.phi.coefficient);
                } else {
                    nlohmann::json values = nlohmann::json::array();
                    for (Complex v : term.phi.values) values.push_back(complex_to_json(v));
                    t["values"] = std::move(values);
                }
                t["A"] = matrix_to_json(term.matrix);
                terms.push_back(std::move(t));
            }
            j["terms"] = std::move(terms);
            break;
        }
    }
    return j;
}

/// Build the evaluable symbol from a parsed spec. A positive `grid`
/// overrides the per-axis resolution (rejected for raw symbols with
/// sampled phi, whose values are tied to their own grid).
inline FourierSymbol build_symbol(const OperatorSpec& spec, int grid = 0) {
    switch (spec.type) {
        case OperatorSpec::Type::jacobi1d:
            return jacobi_symbol(spec.jacobi.value(), spec.restriction, grid);
        case OperatorSpec::Type::schrodinger2d:
            return schrodinger2d_symbol(spec.schrodinger.value(), grid);
        case OperatorSpec::Type::symbol: {
            FourierSymbol sym = spec.raw_symbol.value();
            if (grid > 0 && grid != sym.domain.grid_points) {
                for (const SymbolTerm& term : sym.terms)
                    if (term.phi.kind == PhiFunction::Kind::samples)
                        throw std::invalid_argument("build_symbol: cannot re-grid a symbol with sampled phi");
                sym.domain = sym.domain.with_grid(grid);
            }
            return sym;
        }
    }
    throw std::logic_error("build_symbol: unknown spec type");
}

}  // namespace bandbound
