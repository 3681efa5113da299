#pragma once

#include "seasonlen/core.hpp"

#include <optional>
#include <span>

namespace seasonlen {

/// interpolate -> low-pass -> detrend -> ACF -> detrend ACF -> zeros ->
/// distance segmentation. Absence of seasonality is reported through the
/// outcome, never thrown. Throws InvalidConfig and filter-length errors.
[[nodiscard]] DetectionResult detect_season_length(const TimeSeries& series, const DetectionConfig& config = {});

/// True when p >= 2, values_i == values_{i+p} for every valid i and the
/// length-p prefix is not a repetition of a shorter block.
[[nodiscard]] bool satisfies_season_criteria(std::span<const double> values, std::size_t p);

/// Smallest p <= n/2 satisfying satisfies_season_criteria, by brute force.
[[nodiscard]] std::optional<std::size_t> exact_season_oracle(std::span<const double> values);

/// Period of the strongest DFT bin after linear detrending. None for series
/// shorter than 16, for a flat spectrum and when bin 0 wins.
[[nodiscard]] std::optional<double> baseline_periodogram(const TimeSeries& series);

}  // namespace seasonlen
