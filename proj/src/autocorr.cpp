#include "seasonlen/autocorr.hpp"

#include "seasonlen/detrend.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace seasonlen {

AcfSeries autocorrelation(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw Error(ErrorCode::ZeroVariance, "empty series");

    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));

    std::size_t size = 1;
    while (size < 2 * n) size <<= 1;
    std::vector<double> padded(size, 0.0);
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        padded[i] = values[i] - mean;
        energy += padded[i] * padded[i];
    }
    const double floor = static_cast<double>(n) * std::pow(64.0 * std::numeric_limits<double>::epsilon() * peak, 2);
    if (energy == 0.0 || energy <= floor) throw Error(ErrorCode::ZeroVariance, "series has zero variance");

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, padded);
    for (auto& c : spectrum) c = std::norm(c);
    std::vector<double> lagged;
    fft.inv(lagged, spectrum);

    AcfSeries acf;
    acf.values.resize(n);
    const double zero_lag = lagged[0];
    acf.values[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) acf.values[k] = std::clamp(lagged[k] / zero_lag, -1.0, 1.0);
    return acf;
}

AcfSeries autocorrelation(const TimeSeries& series) { return autocorrelation(series.values()); }

AcfSeries detrend_acf(const AcfSeries& acf) {
    if (acf.detrended) throw Error(ErrorCode::AlreadyDetrended, "ACF has already been detrended");
    const TrendModel line = fit_polynomial(acf.values, 1);
    AcfSeries out;
    out.values = remove_trend(acf.values, line);
    out.detrended = true;
    return out;
}

}  // namespace seasonlen
