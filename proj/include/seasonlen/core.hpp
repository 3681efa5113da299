#pragma once

#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seasonlen {

enum class ErrorCode {
    TooShort,
    NonFinite,
    NonPositiveDelta,
    InvalidConfig,
    DegreeUnsupported,
    InsufficientPoints,
    SingularSystem,
    LengthMismatch,
    CutoffOutOfRange,
    SeriesTooShortForFilter,
    ZeroVariance,
    AlreadyDetrended,
    NotDetrended,
    TooFewDistances,
    TooFewQuotients,
    NoInterval,
    InvalidSpec,
    UnknownFamily,
    InvalidArgument,
};

/// Stable identifier for an error code ("TooShort", "NonFinite", ...).
const char* to_string(ErrorCode code) noexcept;

/// Error raised by every stage. Carries the taxonomy code and, where it
/// applies, the offending element index.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

inline constexpr std::size_t kMinSeriesLength = 4;

/// Uniformly sampled observations. Always holds finite values and a positive
/// sampling interval; construct through validate_series().
class TimeSeries {
public:
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    friend TimeSeries validate_series(std::span<const double> raw, double delta);

    TimeSeries(std::vector<double> values, double delta) : values_(std::move(values)), delta_(delta) {}

    std::vector<double> values_;
    double delta_ = 1.0;
};

/// Checks length >= 4, finiteness (reporting the first bad index) and delta > 0.
[[nodiscard]] TimeSeries validate_series(std::span<const double> raw, double delta = 1.0);

struct DetectionConfig {
    int interp_factor = 4;
    int filter_order = 2;
    /// Half-power frequency in rad/sample of the interpolated signal.
    double filter_cutoff = 0.05 * std::numbers::pi;
    /// Threshold on ln(n (C1 - C2) / C2) above which a quadratic trend is used.
    double trend_log_threshold = std::numbers::e * std::numbers::e;
    /// Zero band half-width as a fraction of the detrended-ACF range.
    double zero_tolerance_rel = 1e-4;
    double quotient_threshold = 0.5;
    int min_zero_count = 3;
    /// Minimum detrended-ACF value at the estimated season lag.
    double min_season_acf = 0.3;

    /// The constants published with the method: order 2, cutoff 0.001 pi,
    /// trend threshold e^2. Everything else as in the default.
    [[nodiscard]] static DetectionConfig published_constants();

    /// Throws Error(InvalidConfig) when a field is out of its domain.
    void validate() const;

    friend bool operator==(const DetectionConfig&, const DetectionConfig&) = default;
};

enum class Outcome {
    Seasonal,
    ZeroVariance,
    FlatResidual,
    TooFewZeros,
    NoDistances,
    NoInterval,
    SeasonTooShort,
    WeakAcfSupport,
};

const char* to_string(Outcome outcome) noexcept;

struct DetectionDiagnostics {
    std::size_t zero_count = 0;
    std::size_t distance_count = 0;
    /// Bounds (a, b] into the sorted distances; absent when no interval was selected.
    std::optional<std::pair<std::size_t, std::size_t>> interval;
    std::size_t member_count = 0;
    /// Set when the estimate rests on fewer than three usable distances.
    bool low_confidence = false;
    /// Detrended ACF value at the estimated season lag (NaN when not evaluated).
    double season_acf = std::numeric_limits<double>::quiet_NaN();
};

struct DetectionResult {
    Outcome outcome = Outcome::ZeroVariance;
    /// unscaled_length * delta; empty for every no-season outcome.
    std::optional<double> season_length;
    /// Season length in original samples.
    std::optional<double> unscaled_length;
    int trend_degree = 1;
    DetectionDiagnostics diagnostics;

    [[nodiscard]] bool seasonal() const noexcept { return unscaled_length.has_value(); }
};

}  // namespace seasonlen
