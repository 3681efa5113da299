#pragma once

#include "seasonlen/core.hpp"

#include <span>
#include <vector>

namespace seasonlen {

/// Normalized autocorrelation indexed by lag 0..n-1.
struct AcfSeries {
    std::vector<double> values;
    /// Set once the secondary linear regression has been subtracted.
    bool detrended = false;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double operator[](std::size_t lag) const { return values[lag]; }
};

/// Mean-removed biased ACF normalized by lag 0, via a zero-padded FFT.
/// Throws ZeroVariance for constant input.
[[nodiscard]] AcfSeries autocorrelation(std::span<const double> values);
[[nodiscard]] AcfSeries autocorrelation(const TimeSeries& series);

/// Subtracts the least-squares line over all lags. Throws AlreadyDetrended.
[[nodiscard]] AcfSeries detrend_acf(const AcfSeries& acf);

}  // namespace seasonlen
