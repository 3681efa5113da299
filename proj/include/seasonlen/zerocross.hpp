#pragma once

#include "seasonlen/autocorr.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace seasonlen {

/// Zero positions on the detrended ACF in interpolated-lag units: linearly
/// interpolated sign changes plus centers of maximal |v| <= eps runs, with
/// eps = epsilon_rel * (max - min). Candidates closer than 0.5 lag are
/// merged into their mean; positions below lag 1 are dropped.
/// Throws NotDetrended.
[[nodiscard]] std::vector<double> find_zeros(const AcfSeries& acf, double epsilon_rel);

struct ZeroDistances {
    /// Consecutive differences of the zero positions.
    std::vector<double> raw;
    /// Entries of raw above 1, sorted ascending.
    std::vector<double> filtered;
};

[[nodiscard]] ZeroDistances zero_distances(std::span<const double> zeros);

/// gamma_i = d_{i+1} / d_i. Throws TooFewDistances when fewer than two.
[[nodiscard]] std::vector<double> quotients(std::span<const double> distances);

/// One-based change points with zeros removed and consecutive repeats
/// collapsed. Throws TooFewQuotients when fewer than two.
[[nodiscard]] std::vector<std::size_t> change_points(std::span<const double> gamma, double k_quot);

/// (a, b) around the widest gap between consecutive change points; the
/// members are distances a+1..b (one-based). Ties go to the earlier gap.
[[nodiscard]] std::pair<std::size_t, std::size_t> select_interval(std::span<const std::size_t> change_points,
                                                                  std::span<const double> distances);

/// 2 * mean(members) / interp_factor.
[[nodiscard]] double season_from_interval(std::span<const double> distances, std::size_t a, std::size_t b,
                                          int interp_factor);

struct ZeroAnalysis {
    std::vector<double> zeros;
    std::vector<double> raw_distances;
    std::vector<double> distances;
    std::vector<double> quotients;
    std::vector<std::size_t> change_points;
    std::optional<std::pair<std::size_t, std::size_t>> interval;
    std::size_t member_count = 0;
    bool low_confidence = false;
    /// Season length in original samples, when one could be formed.
    std::optional<double> season;
};

/// Runs distances through segmentation. Below three distances the estimate
/// falls back to: none for zero, 2 d_1 for one (low confidence), and for two
/// the mean if gamma_1 - 1 <= k_quot, else the smaller one.
[[nodiscard]] ZeroAnalysis analyze_zeros(std::vector<double> zeros, double k_quot, int interp_factor);

}  // namespace seasonlen
