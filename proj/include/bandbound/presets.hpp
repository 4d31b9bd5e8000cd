#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandbound/bounds.hpp"
#include "bandbound/builders.hpp"
#include "bandbound/oracle.hpp"
#include "bandbound/report.hpp"

namespace bandbound {

/// Identity hoppings with staircase diagonal diag(4, 8, ..., 4m): the
/// operator whose spectral measure meets the corner-trace bound exactly.
inline JacobiSpec saturating_jacobi_spec(int block_dim) {
    if (block_dim < 1) throw std::invalid_argument("saturating_jacobi_spec: block dimension must be >= 1");
    std::vector<double> diag(static_cast<std::size_t>(block_dim));
    for (int k = 0; k < block_dim; ++k) diag[static_cast<std::size_t>(k)] = 4.0 * (k + 1);
    JacobiSpec spec;
    spec.period = 1;
    spec.block_dim = block_dim;
    spec.a = {ComplexMatrix::identity(block_dim)};
    spec.b = {ComplexMatrix::diagonal(diag)};
    return spec;
}

/// Scalar period-2 chain with hoppings (T, 1) and zero diagonal: the
/// corner-trace bound stays at 4 while the geometric-mean bound grows as
/// 4*sqrt(T).
inline JacobiSpec uneven_hopping_spec(double t) {
    JacobiSpec spec;
    spec.period = 2;
    spec.block_dim = 1;
    spec.a = {ComplexMatrix{{Complex(t)}}, ComplexMatrix{{Complex(1.0)}}};
    spec.b = {ComplexMatrix(1), ComplexMatrix(1)};
    return spec;
}

struct PresetResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines;  // formatted "key: value" lines
};

namespace preset_detail {

inline int get_int(const std::map<std::string, std::string>& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("preset: parameter '" + key + "' must be an integer");
    }
}

inline double get_double(const std::map<std::string, std::string>& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("preset: parameter '" + key + "' must be a number");
    }
}

inline void add(PresetResult& result, const std::string& key, double value) {
    result.lines.push_back(key + ": " + format_number(value));
}

inline void add_check(PresetResult& result, const std::string& key, bool ok) {
    result.lines.push_back(key + ": " + (ok ? "yes" : "NO"));
    result.pass = result.pass && ok;
}

}  // namespace preset_detail

/// Run a named end-to-end experiment (build -> bound -> oracle -> validate)
/// and judge it against its fixed thresholds.
inline PresetResult run_preset(const std::string& name, const std::map<std::string, std::string>& params) {
    using namespace preset_detail;
    PresetResult result;
    result.name = name;
    result.pass = true;

    if (name == "sharpness-4m") {
        const int m = get_int(params, "m", 2);
        const double target = 4.0 * m;
        const FourierSymbol sym = jacobi_symbol(saturating_jacobi_spec(m));
        const BoundReport report = compute_bounds(sym);
        const ValidationVerdict verdict = validate_report(sym, report, 512);
        add(result, "m", m);
        add(result, "target", target);
        add(result, "sound_total", report.sound_total);
        add(result, "oracle_measure", verdict.oracle_measure);
        add(result, "tightness_ratio", verdict.tightness_ratio);
        add_check(result, "bound_equals_target", std::abs(report.sound_total - target) <= 1e-9);
        add_check(result, "oracle_matches_target", std::abs(verdict.oracle_measure - target) <= 1e-2);
        add_check(result, "validation", verdict.pass());
    } else if (name == "theorem3-equality") {
        const double q = get_double(params, "q", 7.0);
        Schrodinger2DSpec spec;
        spec.period_n = 1;
        spec.period_m = 1;
        spec.q = {{q}};
        const FourierSymbol sym = schrodinger2d_symbol(spec);
        const BoundReport report = compute_bounds(sym);
        const ValidationVerdict verdict = validate_report(sym, report, 128);
        add(result, "q", q);
        add(result, "sound_total", report.sound_total);
        add(result, "oracle_measure", verdict.oracle_measure);
        add_check(result, "bound_equals_8", std::abs(report.sound_total - 8.0) <= 1e-9);
        add_check(result, "oracle_matches_8", std::abs(verdict.oracle_measure - 8.0) <= 1e-2);
        add_check(result, "validation", verdict.pass());
    } else if (name == "large-spectrum") {
        const int n = get_int(params, "N", 2);
        const int m = get_int(params, "M", 3);
        const double eps = get_double(params, "eps", 0.01);
        const double target = 4.0 * std::max(n, m);
        const FourierSymbol sym = schrodinger2d_symbol(large_spectrum_potential(n, m, eps));
        const BoundReport report = compute_bounds(sym);
        const ValidationVerdict verdict = validate_report(sym, report, 128);
        add(result, "N", n);
        add(result, "M", m);
        add(result, "eps", eps);
        add(result, "target", target);
        add(result, "sound_total", report.sound_total);
        add(result, "oracle_measure", verdict.oracle_measure);
        add_check(result, "oracle_in_window",
                  verdict.oracle_measure >= target - 0.5 && verdict.oracle_measure <= target + 0.1);
        add_check(result, "validation", verdict.pass());
    } else if (name == "ds-comparison") {
        const double t = get_double(params, "T", 100.0);
        const JacobiSpec spec = uneven_hopping_spec(t);
        const FourierSymbol sym = jacobi_symbol(spec);
        const BoundReport report = compute_bounds(sym);
        const ValidationVerdict verdict = validate_report(sym, report, 512);
        const auto [shift, shift_bound] = jacobi_best_shift(spec);
        const double ds = geometric_mean_bound({t, 1.0});
        add(result, "T", t);
        add(result, "sound_total", report.sound_total);
        add(result, "best_shift_bound", shift_bound);
        add(result, "ds_bound", ds);
        add(result, "oracle_measure", verdict.oracle_measure);
        add_check(result, "bound_is_4", std::abs(report.sound_total - 4.0) <= 1e-9);
        add_check(result, "best_shift_is_4", std::abs(shift_bound - 4.0) <= 1e-9);
        add_check(result, "ds_is_4_sqrt_T", std::abs(ds - 4.0 * std::sqrt(t)) <= 1e-9 * (1.0 + ds));
        add_check(result, "oracle_below_bound", verdict.oracle_measure <= 4.0 + 1e-9);
        add_check(result, "validation", verdict.pass());
    } else {
        throw std::invalid_argument("preset: unknown preset '" + name +
                                    "' (expected sharpness-4m, theorem3-equality, large-spectrum, ds-comparison)");
    }

    result.lines.push_back(std::string("result: ") + (result.pass ? "PASS" : "FAIL"));
    return result;
}

}  // namespace bandbound
