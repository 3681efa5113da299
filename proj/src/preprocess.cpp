#include "seasonlen/preprocess.hpp"

#include "seasonlen/detrend.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace seasonlen {

std::vector<double> interpolate_linear(std::span<const double> values, int factor) {
    if (factor < 1) throw Error(ErrorCode::InvalidArgument, "interpolation factor must be >= 1");
    if (values.empty()) return {};
    const auto f = static_cast<std::size_t>(factor);
    std::vector<double> out;
    out.reserve(f * (values.size() - 1) + 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        out.push_back(values[i]);
        for (std::size_t j = 1; j < f; ++j) {
            out.push_back(std::lerp(values[i], values[i + 1], static_cast<double>(j) / static_cast<double>(f)));
        }
    }
    out.push_back(values.back());
    return out;
}

TimeSeries interpolate_linear(const TimeSeries& series, int factor) {
    return validate_series(interpolate_linear(series.values(), factor), series.delta() / factor);
}

std::size_t FilterSpec::decay_length() const {
    double radius = 0.0;
    for (const auto& p : poles) radius = std::max(radius, std::abs(p));
    if (radius <= 0.0) return static_cast<std::size_t>(order);
    if (radius >= 1.0) return std::numeric_limits<std::size_t>::max();
    const double steps = std::log(1e-12) / std::log(radius);
    return static_cast<std::size_t>(std::ceil(steps)) + static_cast<std::size_t>(order);
}

FilterSpec design_butterworth_lowpass(int order, double cutoff) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "filter order must be >= 1");
    if (!(cutoff > 0.0 && cutoff < std::numbers::pi)) {
        throw Error(ErrorCode::CutoffOutOfRange, "cutoff must lie strictly between 0 and pi");
    }
    using cplx = std::complex<double>;
    const double warped = 2.0 * std::tan(cutoff / 2.0);

    FilterSpec spec;
    spec.order = order;
    spec.cutoff = cutoff;

    // Analog prototype poles on the left half of the unit circle, scaled to the
    // warped cutoff and mapped through s = 2 (z - 1) / (z + 1).
    std::vector<cplx> poly{cplx(1.0)};
    for (int k = 0; k < order; ++k) {
        const double angle = std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        const cplx analog = warped * std::polar(1.0, angle);
        const cplx pole = (2.0 + analog) / (2.0 - analog);
        spec.poles.push_back(pole);
        poly.push_back(cplx(0.0));
        for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] -= pole * poly[j - 1];
    }
    spec.feedback.resize(poly.size());
    std::transform(poly.begin(), poly.end(), spec.feedback.begin(), [](cplx c) { return c.real(); });

    // All zeros at z = -1: binomial numerator scaled for unit DC gain.
    spec.feedforward.assign(static_cast<std::size_t>(order) + 1, 0.0);
    double binom = 1.0;
    for (int k = 0; k <= order; ++k) {
        spec.feedforward[static_cast<std::size_t>(k)] = binom;
        binom = binom * (order - k) / (k + 1);
    }
    const double a_sum = std::accumulate(spec.feedback.begin(), spec.feedback.end(), 0.0);
    const double b_sum = std::accumulate(spec.feedforward.begin(), spec.feedforward.end(), 0.0);
    for (double& b : spec.feedforward) b *= a_sum / b_sum;
    return spec;
}

std::complex<double> frequency_response(const FilterSpec& spec, double omega) {
    const std::complex<double> zinv = std::polar(1.0, -omega);
    auto horner = [&](const std::vector<double>& c) {
        std::complex<double> acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * zinv + *it;
        return acc;
    };
    return horner(spec.feedforward) / horner(spec.feedback);
}

std::vector<double> filter_causal(std::span<const double> values, const FilterSpec& spec) {
    const auto& b = spec.feedforward;
    const auto& a = spec.feedback;
    const std::size_t order = a.size() - 1;
    std::vector<double> out(values.size());
    if (values.empty()) return out;

    // Transposed direct form II; steady state for a constant input c has
    // z_i = c * sum_{k>i} (b_k - a_k G), G = sum b / sum a.
    const double gain = std::accumulate(b.begin(), b.end(), 0.0) / std::accumulate(a.begin(), a.end(), 0.0);
    std::vector<double> state(order, 0.0);
    for (std::size_t i = order; i-- > 0;) {
        state[i] = (b[i + 1] - a[i + 1] * gain) * values[0] + (i + 1 < order ? state[i + 1] : 0.0);
    }
    for (std::size_t n = 0; n < values.size(); ++n) {
        const double x = values[n];
        const double y = b[0] * x + (order > 0 ? state[0] : 0.0);
        for (std::size_t i = 0; i < order; ++i) {
            state[i] = b[i + 1] * x - a[i + 1] * y + (i + 1 < order ? state[i + 1] : 0.0);
        }
        out[n] = y;
    }
    return out;
}

std::vector<double> apply_filter(std::span<const double> values, const FilterSpec& spec) {
    const std::size_t n = values.size();
    if (n <= 6 * static_cast<std::size_t>(spec.order)) {
        throw Error(ErrorCode::SeriesTooShortForFilter,
                    "need more than " + std::to_string(6 * spec.order) + " samples for an order-" +
                        std::to_string(spec.order) + " filter");
    }
    const TrendModel trend = fit_polynomial(values, 2);
    const std::vector<double> residual = remove_trend(values, trend);

    const std::size_t pad = std::min(n - 1, spec.decay_length());
    std::vector<double> extended;
    extended.reserve(n + 2 * pad);
    for (std::size_t k = pad; k >= 1; --k) extended.push_back(2.0 * residual.front() - residual[k]);
    extended.insert(extended.end(), residual.begin(), residual.end());
    for (std::size_t k = 1; k <= pad; ++k) extended.push_back(2.0 * residual.back() - residual[n - 1 - k]);

    std::vector<double> pass = filter_causal(extended, spec);
    std::reverse(pass.begin(), pass.end());
    pass = filter_causal(pass, spec);
    std::reverse(pass.begin(), pass.end());

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = pass[pad + i] + trend.evaluate(i);
    return out;
}

TimeSeries apply_filter(const TimeSeries& series, const FilterSpec& spec) {
    return validate_series(apply_filter(series.values(), spec), series.delta());
}

}  // namespace seasonlen
