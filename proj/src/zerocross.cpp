#include "seasonlen/zerocross.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seasonlen {

std::vector<double> find_zeros(const AcfSeries& acf, double epsilon_rel) {
    if (!acf.detrended) throw Error(ErrorCode::NotDetrended, "zeros are searched on the detrended ACF");
    const auto& v = acf.values;
    if (v.empty()) return {};
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double eps = epsilon_rel * (*hi - *lo);

    std::vector<double> candidates;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] * v[i + 1] < 0.0) candidates.push_back(static_cast<double>(i) + v[i] / (v[i] - v[i + 1]));
    }
    for (std::size_t i = 0; i < v.size();) {
        if (std::abs(v[i]) > eps) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < v.size() && std::abs(v[j + 1]) <= eps) ++j;
        candidates.push_back(0.5 * static_cast<double>(i + j));
        i = j + 1;
    }
    std::erase_if(candidates, [](double z) { return z < 1.0; });
    std::sort(candidates.begin(), candidates.end());

    std::vector<double> zeros;
    for (std::size_t i = 0; i < candidates.size();) {
        std::size_t j = i;
        double sum = candidates[i];
        while (j + 1 < candidates.size() && candidates[j + 1] - candidates[j] <= 0.5) sum += candidates[++j];
        zeros.push_back(sum / static_cast<double>(j - i + 1));
        i = j + 1;
    }
    return zeros;
}

ZeroDistances zero_distances(std::span<const double> zeros) {
    ZeroDistances out;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) out.raw.push_back(zeros[i + 1] - zeros[i]);
    std::copy_if(out.raw.begin(), out.raw.end(), std::back_inserter(out.filtered), [](double d) { return d > 1.0; });
    std::sort(out.filtered.begin(), out.filtered.end());
    return out;
}

std::vector<double> quotients(std::span<const double> distances) {
    if (distances.size() < 2) throw Error(ErrorCode::TooFewDistances, "need at least two distances");
    std::vector<double> gamma(distances.size() - 1);
    for (std::size_t i = 0; i + 1 < distances.size(); ++i) gamma[i] = distances[i + 1] / distances[i];
    return gamma;
}

std::vector<std::size_t> change_points(std::span<const double> gamma, double k_quot) {
    if (gamma.size() < 2) throw Error(ErrorCode::TooFewQuotients, "need at least two quotients");
    const std::size_t count = gamma.size();
    std::vector<std::size_t> points;
    auto emit = [&](std::size_t p) {
        if (p != 0 && (points.empty() || points.back() != p)) points.push_back(p);
    };
    // i is one-based; gamma[i - 1] is gamma_i.
    for (std::size_t i = 1; i <= count; ++i) {
        if (i == 1 && std::abs(gamma[0] - gamma[1]) <= k_quot) emit(1);
        else if (i == count) emit(i);
        else if (std::abs(gamma[i - 1] - gamma[i]) > k_quot) emit(i + 1);
    }
    return points;
}

std::pair<std::size_t, std::size_t> select_interval(std::span<const std::size_t> change_points,
                                                    std::span<const double> distances) {
    if (change_points.size() < 2) throw Error(ErrorCode::NoInterval, "need at least two change points");
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < change_points.size(); ++i) {
        if (change_points[i + 1] - change_points[i] > change_points[best + 1] - change_points[best]) best = i;
    }
    const std::size_t a = change_points[best];
    const std::size_t b = change_points[best + 1];
    if (b > distances.size() || a >= b) throw Error(ErrorCode::NoInterval, "change points exceed the distances");
    return {a, b};
}

double season_from_interval(std::span<const double> distances, std::size_t a, std::size_t b, int interp_factor) {
    if (a >= b || b > distances.size()) throw Error(ErrorCode::InvalidArgument, "interval out of range");
    if (interp_factor < 1) throw Error(ErrorCode::InvalidArgument, "interpolation factor must be >= 1");
    const double sum = std::accumulate(distances.begin() + static_cast<std::ptrdiff_t>(a),
                                       distances.begin() + static_cast<std::ptrdiff_t>(b), 0.0);
    return 2.0 * sum / static_cast<double>(b - a) / interp_factor;
}

ZeroAnalysis analyze_zeros(std::vector<double> zeros, double k_quot, int interp_factor) {
    ZeroAnalysis out;
    out.zeros = std::move(zeros);
    auto dist = zero_distances(out.zeros);
    out.raw_distances = std::move(dist.raw);
    out.distances = std::move(dist.filtered);
    const auto& d = out.distances;

    switch (d.size()) {
        case 0:
            return out;
        case 1:
            out.interval = std::pair<std::size_t, std::size_t>{0, 1};
            out.member_count = 1;
            out.low_confidence = true;
            out.season = 2.0 * d[0] / interp_factor;
            return out;
        case 2:
            out.quotients = quotients(d);
            out.low_confidence = true;
            if (out.quotients[0] - 1.0 <= k_quot) {
                out.interval = std::pair<std::size_t, std::size_t>{0, 2};
                out.member_count = 2;
                out.season = season_from_interval(d, 0, 2, interp_factor);
            } else {
                out.interval = std::pair<std::size_t, std::size_t>{0, 1};
                out.member_count = 1;
                out.season = season_from_interval(d, 0, 1, interp_factor);
            }
            return out;
        default:
            break;
    }

    out.quotients = quotients(d);
    out.change_points = change_points(out.quotients, k_quot);
    if (out.change_points.size() < 2) return out;
    const auto [a, b] = select_interval(out.change_points, d);
    out.interval = std::pair<std::size_t, std::size_t>{a, b};
    out.member_count = b - a;
    out.season = season_from_interval(d, a, b, interp_factor);
    return out;
}

}  // namespace seasonlen
