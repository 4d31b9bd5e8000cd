#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bandbound/bounds.hpp"
#include "bandbound/eig.hpp"
#include "bandbound/intervals.hpp"
#include "bandbound/symbol.hpp"

namespace bandbound {

/// Eigenvalue curves sampled over the k-grid. Band n is approximated by the
/// interval [min_k lambda_n, max_k lambda_n]; valid because each curve is
/// continuous and the domain is connected, so no band has interior holes.
struct SampledBands {
    int grid_points = 0;  // L per axis
    std::vector<std::vector<double>> samples;           // [band][flat grid point]
    std::vector<std::pair<double, double>> band_ranges; // per-band [min, max]
    double union_measure = 0.0;
    std::vector<GapInterval> observed_gaps;
};

/// Eigendecompose the symbol at every grid point; L overrides the per-axis
/// resolution of the symbol's domain.
inline SampledBands sample_bands(const FourierSymbol& sym, int grid_points) {
    validate_symbol(sym);
    if (grid_points < 2) throw std::invalid_argument("sample_bands: grid resolution must be >= 2");
    const KDomain domain = sym.domain.with_grid(grid_points);
    FourierSymbol resampled = sym;
    resampled.domain = domain;

    const int bands = sym.dim();
    const std::vector<std::vector<double>> grid = sample_grid(domain);

    SampledBands out;
    out.grid_points = grid_points;
    out.samples.assign(static_cast<std::size_t>(bands), std::vector<double>());
    for (auto& band : out.samples) band.reserve(grid.size());

    for (const std::vector<double>& k : grid) {
        const std::vector<double> values = hermitian_eigenvalues(evaluate(resampled, k));
        for (int n = 0; n < bands; ++n) out.samples[static_cast<std::size_t>(n)].push_back(values[static_cast<std::size_t>(n)]);
    }

    out.band_ranges.reserve(static_cast<std::size_t>(bands));
    for (int n = 0; n < bands; ++n) {
        const auto& band = out.samples[static_cast<std::size_t>(n)];
        const auto [lo, hi] = std::minmax_element(band.begin(), band.end());
        out.band_ranges.emplace_back(*lo, *hi);
    }
    out.union_measure = bandbound::union_measure(out.band_ranges);
    out.observed_gaps = detail::gaps_between(detail::merge_intervals(out.band_ranges));
    return out;
}

/// Cross-check of a bound report against the sampling oracle.
struct ValidationVerdict {
    bool enclosure_sound = false;    // every sampled eigenvalue inside its enclosure
    double max_enclosure_violation = 0.0;
    bool measure_chain = false;      // oracle measure <= refined_total
    double oracle_measure = 0.0;
    bool gap_sound = false;          // no sampled eigenvalue inside a certified gap
    double tightness_ratio = 0.0;    // oracle measure / sound_total

    bool pass() const { return enclosure_sound && measure_chain && gap_sound; }
};

inline constexpr double kValidationTolerance = 1e-8;

inline int default_validation_grid(int dim) { return dim == 1 ? 512 : 128; }

/// Sample the symbol on an L-per-axis grid and verify every certified claim
/// of the report: enclosure containment, the measure chain, and gap
/// emptiness. Grid extrema under-estimate the true band edges, so every
/// comparison leans in the safe direction.
inline ValidationVerdict validate_report(const FourierSymbol& sym, const BoundReport& report, int grid_points = 0,
                                         double tolerance = kValidationTolerance) {
    validate_symbol(sym);
    if (static_cast<int>(report.enclosures.size()) != sym.dim() || report.center_matrix.dim() != sym.dim())
        throw std::invalid_argument("validate_report: report does not match the symbol");
    if (grid_points <= 0) grid_points = default_validation_grid(sym.domain.dim());

    const SampledBands bands = sample_bands(sym, grid_points);

    ValidationVerdict verdict;
    verdict.oracle_measure = bands.union_measure;

    verdict.enclosure_sound = true;
    for (std::size_t n = 0; n < report.enclosures.size(); ++n) {
        const BandEnclosure& enclosure = report.enclosures[n];
        for (double value : bands.samples[n]) {
            const double violation = std::max(enclosure.lower - value, value - enclosure.upper);
            verdict.max_enclosure_violation = std::max(verdict.max_enclosure_violation, violation);
            if (violation > tolerance) verdict.enclosure_sound = false;
        }
    }

    verdict.measure_chain = bands.union_measure <= report.refined_total + tolerance;

    verdict.gap_sound = true;
    for (const GapInterval& gap : report.gaps) {
        for (const auto& band : bands.samples) {
            for (double value : band) {
                if (value > gap.lower + tolerance && value < gap.upper - tolerance) {
                    verdict.gap_sound = false;
                    break;
                }
            }
        }
    }

    verdict.tightness_ratio = report.sound_total > 0.0 ? bands.union_measure / report.sound_total : 0.0;
    return verdict;
}

}  // namespace bandbound
