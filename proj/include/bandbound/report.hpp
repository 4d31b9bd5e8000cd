#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "bandbound/bounds.hpp"
#include "bandbound/oracle.hpp"

namespace bandbound {

/// 12 significant digits: below certification tolerance, above noise.
inline std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

/// Extra lines the bound report carries for specific operator types.
struct BoundReportContext {
    std::string operator_type = "symbol";
    int symbol_dim = 0;
    std::optional<int> best_shift_index;
    std::optional<double> best_shift_bound;
    std::optional<double> restricted_bound;  // 4*sin((beta-alpha)/2)*min_n Tr|a_n|
};

inline void write_bound_report_text(std::ostream& out, const BoundReport& report,
                                    const BoundReportContext& context) {
    out << "operator_type: " << context.operator_type << "\n";
    out << "symbol_dim: " << context.symbol_dim << "\n";
    out << "num_terms: " << report.terms.size() << "\n";
    out << "paper_total: " << format_number(report.paper_total) << "\n";
    out << "sound_total: " << format_number(report.sound_total) << "\n";
    out << "refined_total: " << format_number(report.refined_total) << "\n";
    out << "trivial_total: " << format_number(report.trivial_total) << "\n";
    if (context.best_shift_index) out << "best_shift_index: " << *context.best_shift_index << "\n";
    if (context.best_shift_bound) out << "best_shift_bound: " << format_number(*context.best_shift_bound) << "\n";
    if (context.restricted_bound) out << "restricted_bound: " << format_number(*context.restricted_bound) << "\n";
    for (const TermContribution& term : report.terms) {
        const std::string prefix = "term_" + std::to_string(term.index) + "_";
        out << prefix << "diameter: " << format_number(term.image_diameter) << "\n";
        out << prefix << "radius: " << format_number(term.enclosing_radius) << "\n";
        out << prefix << "center_re: " << format_number(term.center.real()) << "\n";
        out << prefix << "center_im: " << format_number(term.center.imag()) << "\n";
        out << prefix << "nuclear_norm: " << format_number(term.nuclear_norm) << "\n";
        out << prefix << "paper_contribution: " << format_number(term.paper_contribution) << "\n";
        out << prefix << "sound_contribution: " << format_number(term.sound_contribution) << "\n";
    }
    for (const BandEnclosure& enclosure : report.enclosures) {
        const std::string prefix = "enclosure_" + std::to_string(enclosure.index) + "_";
        out << prefix << "lower: " << format_number(enclosure.lower) << "\n";
        out << prefix << "upper: " << format_number(enclosure.upper) << "\n";
    }
    out << "num_gaps: " << report.gaps.size() << "\n";
    for (std::size_t g = 0; g < report.gaps.size(); ++g) {
        const std::string prefix = "gap_" + std::to_string(g + 1) + "_";
        out << prefix << "lower: " << format_number(report.gaps[g].lower) << "\n";
        out << prefix << "upper: " << format_number(report.gaps[g].upper) << "\n";
    }
}

inline void write_bound_report_csv(std::ostream& out, const BoundReport& report) {
    out << "kind,index,diameter,radius,center_re,center_im,nuclear_norm,"
           "paper_contribution,sound_contribution,lower,upper\n";
    for (const TermContribution& term : report.terms) {
        out << "term," << term.index << ',' << format_number(term.image_diameter) << ','
            << format_number(term.enclosing_radius) << ',' << format_number(term.center.real()) << ','
            << format_number(term.center.imag()) << ',' << format_number(term.nuclear_norm) << ','
            << format_number(term.paper_contribution) << ',' << format_number(term.sound_contribution) << ",,\n";
    }
    for (const BandEnclosure& enclosure : report.enclosures) {
        out << "enclosure," << enclosure.index << ",,,,,,,," << format_number(enclosure.lower) << ','
            << format_number(enclosure.upper) << "\n";
    }
    for (std::size_t g = 0; g < report.gaps.size(); ++g) {
        out << "gap," << g + 1 << ",,,,,,,," << format_number(report.gaps[g].lower) << ','
            << format_number(report.gaps[g].upper) << "\n";
    }
}

inline void write_oracle_summary(std::ostream& out, const SampledBands& bands) {
    out << "grid_points: " << bands.grid_points << "\n";
    out << "num_bands: " << bands.band_ranges.size() << "\n";
    out << "union_measure: " << format_number(bands.union_measure) << "\n";
    for (std::size_t n = 0; n < bands.band_ranges.size(); ++n) {
        const std::string prefix = "band_" + std::to_string(n + 1) + "_";
        out << prefix << "lower: " << format_number(bands.band_ranges[n].first) << "\n";
        out << prefix << "upper: " << format_number(bands.band_ranges[n].second) << "\n";
    }
    out << "num_observed_gaps: " << bands.observed_gaps.size() << "\n";
    for (std::size_t g = 0; g < bands.observed_gaps.size(); ++g) {
        const std::string prefix = "observed_gap_" + std::to_string(g + 1) + "_";
        out << prefix << "lower: " << format_number(bands.observed_gaps[g].lower) << "\n";
        out << prefix << "upper: " << format_number(bands.observed_gaps[g].upper) << "\n";
    }
}

/// Per-k eigenvalue table for external plotting. Grid indices unflatten
/// with the last axis fastest, matching sample_grid ordering.
inline void write_band_csv(std::ostream& out, const SampledBands& bands, int dim) {
    if (dim == 1)
        out << "band,k_index,eigenvalue\n";
    else
        out << "band,k1_index,k2_index,eigenvalue\n";
    for (std::size_t n = 0; n < bands.samples.size(); ++n) {
        const auto& band = bands.samples[n];
        for (std::size_t flat = 0; flat < band.size(); ++flat) {
            out << n + 1 << ',';
            if (dim == 1) {
                out << flat;
            } else {
                out << flat / static_cast<std::size_t>(bands.grid_points) << ','
                    << flat % static_cast<std::size_t>(bands.grid_points);
            }
            out << ',' << format_number(band[flat]) << "\n";
        }
    }
}

inline void write_validation(std::ostream& out, const ValidationVerdict& verdict) {
    out << "oracle_measure: " << format_number(verdict.oracle_measure) << "\n";
    out << "enclosure_sound: " << (verdict.enclosure_sound ? "yes" : "NO") << "\n";
    out << "measure_chain: " << (verdict.measure_chain ? "yes" : "NO") << "\n";
    out << "gap_sound: " << (verdict.gap_sound ? "yes" : "NO") << "\n";
    out << "tightness_ratio: " << format_number(verdict.tightness_ratio) << "\n";
}

}  // namespace bandbound
