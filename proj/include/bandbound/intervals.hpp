#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bandbound {

/// Open interval strictly between two spectral components.
struct GapInterval {
    double lower = 0.0;
    double upper = 0.0;
};

namespace detail {

inline constexpr double kMergeTolerance = 1e-12;

/// Sort-and-merge; intervals closer than the merge tolerance are treated
/// as touching and fused into one component.
inline std::vector<std::pair<double, double>> merge_intervals(std::vector<std::pair<double, double>> intervals) {
    for (const auto& [lo, hi] : intervals) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
            throw std::invalid_argument("merge_intervals: malformed interval");
    }
    if (intervals.empty()) return intervals;
    std::sort(intervals.begin(), intervals.end());
    std::vector<std::pair<double, double>> merged;
    merged.push_back(intervals.front());
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first <= merged.back().second + kMergeTolerance)
            merged.back().second = std::max(merged.back().second, intervals[i].second);
        else
            merged.push_back(intervals[i]);
    }
    return merged;
}

inline std::vector<GapInterval> gaps_between(const std::vector<std::pair<double, double>>& merged) {
    std::vector<GapInterval> gaps;
    for (std::size_t i = 1; i < merged.size(); ++i)
        gaps.push_back(GapInterval{merged[i - 1].second, merged[i].first});
    return gaps;
}

}  // namespace detail

/// Lebesgue measure of a union of closed intervals.
inline double union_measure(std::vector<std::pair<double, double>> intervals) {
    double total = 0.0;
    for (const auto& [lo, hi] : detail::merge_intervals(std::move(intervals))) total += hi - lo;
    return total;
}

}  // namespace bandbound
