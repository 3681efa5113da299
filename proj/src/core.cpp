#include "seasonlen/core.hpp"

#include <cmath>

namespace seasonlen {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NonPositiveDelta: return "NonPositiveDelta";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::CutoffOutOfRange: return "CutoffOutOfRange";
        case ErrorCode::SeriesTooShortForFilter: return "SeriesTooShortForFilter";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::AlreadyDetrended: return "AlreadyDetrended";
        case ErrorCode::NotDetrended: return "NotDetrended";
        case ErrorCode::TooFewDistances: return "TooFewDistances";
        case ErrorCode::TooFewQuotients: return "TooFewQuotients";
        case ErrorCode::NoInterval: return "NoInterval";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

const char* to_string(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::Seasonal: return "Seasonal";
        case Outcome::ZeroVariance: return "ZeroVariance";
        case Outcome::FlatResidual: return "FlatResidual";
        case Outcome::TooFewZeros: return "TooFewZeros";
        case Outcome::NoDistances: return "NoDistances";
        case Outcome::NoInterval: return "NoInterval";
        case Outcome::SeasonTooShort: return "SeasonTooShort";
        case Outcome::WeakAcfSupport: return "WeakAcfSupport";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index) {}

TimeSeries validate_series(std::span<const double> raw, double delta) {
    if (raw.size() < kMinSeriesLength) {
        throw Error(ErrorCode::TooShort, "series has " + std::to_string(raw.size()) +
                                             " observations, at least " +
                                             std::to_string(kMinSeriesLength) + " are required");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i])) {
            throw Error(ErrorCode::NonFinite, "observation " + std::to_string(i) + " is not finite", i);
        }
    }
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorCode::NonPositiveDelta, "sampling interval must be a positive finite number");
    }
    return TimeSeries(std::vector<double>(raw.begin(), raw.end()), delta);
}

DetectionConfig DetectionConfig::published_constants() {
    DetectionConfig config;
    config.filter_order = 2;
    config.filter_cutoff = 0.001 * std::numbers::pi;
    config.trend_log_threshold = std::numbers::e * std::numbers::e;
    return config;
}

void DetectionConfig::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
    if (interp_factor < 1) fail("interp_factor must be >= 1");
    if (filter_order < 1) fail("filter_order must be >= 1");
    if (!(filter_cutoff > 0.0 && filter_cutoff < std::numbers::pi)) fail("filter_cutoff must lie in (0, pi)");
    if (!std::isfinite(trend_log_threshold)) fail("trend_log_threshold must be finite");
    if (!(zero_tolerance_rel >= 0.0) || !std::isfinite(zero_tolerance_rel)) fail("zero_tolerance_rel must be >= 0");
    if (!(quotient_threshold > 0.0 && quotient_threshold < 1.0)) fail("quotient_threshold must lie in (0, 1)");
    if (min_zero_count < 0) fail("min_zero_count must be >= 0");
    if (!std::isfinite(min_season_acf) || min_season_acf > 1.0) fail("min_season_acf must be finite and <= 1");
}

}  // namespace seasonlen
