#pragma once

#include "seasonlen/core.hpp"

#include <complex>
#include <span>
#include <vector>

namespace seasonlen {

/// Inserts factor-1 equally spaced points between neighbours. Output length
/// is factor*(n-1)+1 and original sample i lands at index factor*i.
[[nodiscard]] std::vector<double> interpolate_linear(std::span<const double> values, int factor);
[[nodiscard]] TimeSeries interpolate_linear(const TimeSeries& series, int factor);

/// Discrete Butterworth low-pass realized as a transfer function
///   H(z) = sum b_k z^-k / sum a_k z^-k,  a_0 = 1.
struct FilterSpec {
    int order = 0;
    /// Half-power frequency, rad/sample (pi = Nyquist).
    double cutoff = 0.0;
    std::vector<double> feedforward;
    std::vector<double> feedback;
    /// Roots of the feedback polynomial in z.
    std::vector<std::complex<double>> poles;

    /// Samples after which the impulse response has decayed below 1e-12.
    [[nodiscard]] std::size_t decay_length() const;
};

/// Bilinear transform of the analog prototype with the cutoff pre-warped,
/// so |H(e^{i cutoff})| = 1/sqrt(2) exactly up to rounding.
[[nodiscard]] FilterSpec design_butterworth_lowpass(int order, double cutoff);

/// H(e^{i omega}) of a single pass.
[[nodiscard]] std::complex<double> frequency_response(const FilterSpec& spec, double omega);

/// Zero-phase (forward, then time-reversed) application.
///
/// Edge handling: the least-squares quadratic is taken out before filtering
/// and added back afterwards, the remainder is odd-reflected at both ends by
/// the filter's decay length (capped at n-1), and each pass starts from the
/// steady state of its first input sample. Polynomial trends up to degree 2
/// therefore pass without start-up transients.
[[nodiscard]] std::vector<double> apply_filter(std::span<const double> values, const FilterSpec& spec);
[[nodiscard]] TimeSeries apply_filter(const TimeSeries& series, const FilterSpec& spec);

/// One causal pass, state initialised to the steady-state response of x[0].
[[nodiscard]] std::vector<double> filter_causal(std::span<const double> values, const FilterSpec& spec);

}  // namespace seasonlen
