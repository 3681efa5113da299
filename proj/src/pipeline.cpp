#include "seasonlen/pipeline.hpp"

#include "seasonlen/autocorr.hpp"
#include "seasonlen/detrend.hpp"
#include "seasonlen/preprocess.hpp"
#include "seasonlen/zerocross.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace seasonlen {

namespace {

double rms_about_mean(std::span<const double> v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size()));
}

double rms(std::span<const double> v) {
    double ss = 0.0;
    for (double x : v) ss += x * x;
    return std::sqrt(ss / static_cast<double>(v.size()));
}

}  // namespace

DetectionResult detect_season_length(const TimeSeries& series, const DetectionConfig& config) {
    config.validate();
    DetectionResult result;

    const auto upsampled = interpolate_linear(series.values(), config.interp_factor);
    const auto spec = design_butterworth_lowpass(config.filter_order, config.filter_cutoff);
    const auto filtered = apply_filter(upsampled, spec);

    double peak = 0.0;
    for (double v : filtered) peak = std::max(peak, std::abs(v));
    const double spread = rms_about_mean(filtered);
    if (spread <= 1e-12 * peak || spread == 0.0) {
        result.outcome = Outcome::ZeroVariance;
        return result;
    }

    result.trend_degree = select_trend_degree(filtered, config.trend_log_threshold);
    const auto residual = remove_trend(filtered, fit_polynomial(filtered, result.trend_degree));
    if (rms(residual) <= 1e-9 * spread) {
        result.outcome = Outcome::FlatResidual;
        return result;
    }

    AcfSeries acf;
    try {
        acf = detrend_acf(autocorrelation(residual));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroVariance) throw;
        result.outcome = Outcome::ZeroVariance;
        return result;
    }

    auto zeros = find_zeros(acf, config.zero_tolerance_rel);
    auto& diag = result.diagnostics;
    diag.zero_count = zeros.size();
    if (zeros.size() < static_cast<std::size_t>(config.min_zero_count)) {
        result.outcome = Outcome::TooFewZeros;
        return result;
    }

    const auto analysis = analyze_zeros(std::move(zeros), config.quotient_threshold, config.interp_factor);
    diag.distance_count = analysis.distances.size();
    diag.interval = analysis.interval;
    diag.member_count = analysis.member_count;
    diag.low_confidence = analysis.low_confidence;
    if (analysis.distances.empty()) {
        result.outcome = Outcome::NoDistances;
        return result;
    }
    if (!analysis.season) {
        result.outcome = Outcome::NoInterval;
        return result;
    }
    const double s = *analysis.season;
    if (s < 2.0) {
        result.outcome = Outcome::SeasonTooShort;
        return result;
    }

    const double lag = std::round(s * config.interp_factor);
    if (lag < static_cast<double>(acf.size())) diag.season_acf = acf[static_cast<std::size_t>(lag)];
    if (!(diag.season_acf >= config.min_season_acf)) {
        result.outcome = Outcome::WeakAcfSupport;
        return result;
    }

    result.outcome = Outcome::Seasonal;
    result.unscaled_length = s;
    result.season_length = s * series.delta();
    return result;
}

bool satisfies_season_criteria(std::span<const double> values, std::size_t p) {
    if (p < 2 || p > values.size()) return false;
    for (std::size_t i = 0; i + p < values.size(); ++i) {
        if (values[i] != values[i + p]) return false;
    }
    const auto prefix = values.first(p);
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = 0; i + d < p && repeats; ++i) repeats = prefix[i] == prefix[i + d];
        if (repeats) return false;
    }
    return true;
}

std::optional<std::size_t> exact_season_oracle(std::span<const double> values) {
    for (std::size_t p = 2; p <= values.size() / 2; ++p) {
        if (satisfies_season_criteria(values, p)) return p;
    }
    return std::nullopt;
}

std::optional<double> baseline_periodogram(const TimeSeries& series) {
    const std::size_t n = series.size();
    if (n < 16) return std::nullopt;
    const auto residual = remove_trend(series.values(), fit_polynomial(series.values(), 1));
    double peak = 0.0;
    for (double v : series.values()) peak = std::max(peak, std::abs(v));
    if (rms(residual) <= 1e-12 * peak) return std::nullopt;

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, residual);
    std::size_t best = 0;
    double best_power = 0.0;
    for (std::size_t k = 0; k <= n / 2; ++k) {
        const double power = std::norm(spectrum[k]);
        if (power > best_power) {
            best_power = power;
            best = k;
        }
    }
    if (best == 0) return std::nullopt;
    return static_cast<double>(n) / static_cast<double>(best);
}

}  // namespace seasonlen
