#include "seasonlen/synthgen.hpp"

#include "seasonlen/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <set>

namespace seasonlen {

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
}

double SplitMix64::normal() noexcept {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    return u * scale;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

void check_spec(const SeriesSpec& spec) {
    if (spec.length < kMinSeriesLength) invalid("length must be at least 4");
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) invalid("noise_sigma must be >= 0");
    if (spec.outlier_count * 10 >= spec.length) invalid("outlier count must stay below length/10");
    if (!std::isfinite(spec.outlier_magnitude)) invalid("outlier magnitude must be finite");
    if (spec.trend.size() > 3) invalid("trend degree must be at most 2");
    for (double c : spec.trend)
        if (!std::isfinite(c)) invalid("trend coefficients must be finite");
    if (!(spec.amplitude_drift > 0.0) || !std::isfinite(spec.amplitude_drift)) invalid("amplitude drift must be > 0");

    if (!spec.period) {
        if (!spec.season_outlier_cycles.empty()) invalid("season outliers need a seasonal pattern");
        return;
    }
    const double p = *spec.period;
    if (!std::isfinite(p) || p < 2.0) invalid("period must be >= 2");
    if (static_cast<double>(spec.length) < 4.0 * p) invalid("length must be at least 4 periods");
    const auto cycles = static_cast<std::size_t>(std::ceil(static_cast<double>(spec.length) / p));
    for (auto c : spec.season_outlier_cycles)
        if (c >= cycles) invalid("season outlier cycle out of range");
    if (spec.pattern == Pattern::TwoSinusoids && (spec.primary_harmonic < 1 || spec.secondary_harmonic < 1)) {
        invalid("harmonics must be >= 1");
    }
    if (spec.pattern == Pattern::Tile) {
        if (spec.tile.empty() || static_cast<double>(spec.tile.size()) != p) invalid("tile size must equal the period");
        for (double v : spec.tile)
            if (!std::isfinite(v)) invalid("tile values must be finite");
        std::vector<double> tiled(std::max(spec.length, 2 * spec.tile.size()));
        for (std::size_t i = 0; i < tiled.size(); ++i) tiled[i] = spec.tile[i % spec.tile.size()];
        if (exact_season_oracle(tiled) != spec.tile.size()) invalid("tile is a repetition of a shorter block");
    }
}

double seasonal_value(const SeriesSpec& spec, std::size_t t) {
    const double p = *spec.period;
    const double td = static_cast<double>(t);
    switch (spec.pattern) {
        case Pattern::Sinusoid:
            return std::sin(2.0 * std::numbers::pi * td / p);
        case Pattern::Tile:
            return spec.tile[t % spec.tile.size()];
        case Pattern::TwoSinusoids:
            return std::sin(2.0 * std::numbers::pi * spec.primary_harmonic * td / p) +
                   spec.secondary_amplitude *
                       std::sin(2.0 * std::numbers::pi * spec.secondary_harmonic * td / p + spec.secondary_phase);
    }
    return 0.0;
}

}  // namespace

GeneratedSeries generate(const SeriesSpec& spec) {
    check_spec(spec);
    SplitMix64 rng(spec.seed);
    const std::size_t n = spec.length;
    std::vector<double> x(n, 0.0);

    if (spec.period) {
        const std::set<std::size_t> replaced(spec.season_outlier_cycles.begin(), spec.season_outlier_cycles.end());
        for (std::size_t t = 0; t < n; ++t) {
            const auto cycle = static_cast<std::size_t>(std::floor(static_cast<double>(t) / *spec.period));
            if (replaced.contains(cycle)) {
                x[t] = 0.5 * rng.normal();
                continue;
            }
            x[t] = seasonal_value(spec, t);
            if (spec.amplitude_drift != 1.0) x[t] *= std::pow(spec.amplitude_drift, static_cast<double>(cycle));
        }
    }

    if (spec.noise_sigma > 0.0) {
        double walk = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double step = spec.noise_sigma * rng.normal();
            if (spec.noise_kind == NoiseKind::RandomWalk) {
                walk += step;
                x[t] += walk;
            } else {
                x[t] += step;
            }
        }
    }

    if (!spec.trend.empty()) {
        for (std::size_t t = 0; t < n; ++t) {
            const double td = static_cast<double>(t);
            double acc = 0.0;
            for (auto it = spec.trend.rbegin(); it != spec.trend.rend(); ++it) acc = acc * td + *it;
            x[t] += acc;
        }
    }

    if (spec.outlier_count > 0) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t k = 0; k < spec.outlier_count; ++k) {
            std::swap(order[k], order[k + rng.below(n - k)]);
            const double sign = rng.below(2) == 0 ? -1.0 : 1.0;
            x[order[k]] += sign * spec.outlier_magnitude;
        }
    }

    return {validate_series(x), spec.period};
}

namespace {

constexpr std::uint64_t kFamilyStride = 0xD1B54A32D192ED03ULL;

std::vector<double> smooth_block(SplitMix64& rng, std::size_t period) {
    std::vector<double> block(period, 0.0);
    for (int h = 1; h <= 3; ++h) {
        const double amp = rng.uniform(0.2, 1.0) / h;
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t t = 0; t < period; ++t) {
            block[t] += amp * std::sin(2.0 * std::numbers::pi * h * static_cast<double>(t) / static_cast<double>(period) + phase);
        }
    }
    double peak = 0.0;
    for (double v : block) peak = std::max(peak, std::abs(v));
    for (double& v : block) v /= peak;
    return block;
}

std::size_t log_uniform_period(SplitMix64& rng, double lo, double hi) {
    return static_cast<std::size_t>(std::lround(std::exp(rng.uniform(std::log(lo), std::log(hi)))));
}

Pattern cycle_pattern(std::size_t i) {
    constexpr Pattern kOrder[] = {Pattern::Sinusoid, Pattern::Tile, Pattern::TwoSinusoids};
    return kOrder[i % 3];
}

SeriesSpec seasonal_spec(SplitMix64& rng, Pattern pattern, std::size_t period, std::size_t length) {
    SeriesSpec spec;
    spec.pattern = pattern;
    spec.period = static_cast<double>(period);
    spec.length = length;
    if (pattern == Pattern::Tile) spec.tile = smooth_block(rng, period);
    return spec;
}

std::vector<double> random_trend(SplitMix64& rng, std::size_t kind, std::size_t n) {
    const double nd = static_cast<double>(n);
    // Total change over the series of up to 10 seasonal amplitudes.
    constexpr double scale = 10.0;
    if (kind == 1) return {0.0, rng.uniform(-scale, scale) / nd};
    if (kind == 2) return {0.0, 0.0, 2.0 * rng.uniform(-scale, scale) / (nd * nd)};
    return {};
}

std::string case_label(std::string_view family, std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02zu", index + 1);
    return std::string(family) + "-" + buf;
}

BenchmarkCase make_case(std::string_view family, std::size_t index, const SeriesSpec& spec,
                        std::vector<double> references) {
    return {std::string(family), case_label(family, index), generate(spec).series, std::move(references)};
}

std::vector<BenchmarkCase> diverse(SplitMix64& rng) {
    std::vector<BenchmarkCase> out;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto p = log_uniform_period(rng, 6.0, 400.0);
        const auto n = static_cast<std::size_t>(static_cast<double>(p) * rng.uniform(8.0, 30.0));
        auto spec = seasonal_spec(rng, cycle_pattern(i), p, n);
        spec.noise_sigma = rng.uniform(0.0, 0.2);
        spec.trend = random_trend(rng, i % 3, n);
        spec.seed = rng.next();
        out.push_back(make_case("Diverse", i, spec, {static_cast<double>(p)}));
    }
    return out;
}

std::vector<BenchmarkCase> complex_family(SplitMix64& rng) {
    std::vector<BenchmarkCase> out;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto p = log_uniform_period(rng, 8.0, 300.0);
        const auto n = static_cast<std::size_t>(static_cast<double>(p) * rng.uniform(12.0, 30.0));
        auto spec = seasonal_spec(rng, cycle_pattern(i), p, n);
        spec.noise_sigma = rng.uniform(0.1, 0.3);
        spec.trend = random_trend(rng, i % 3, n);
        spec.outlier_count = n / 40;
        spec.outlier_magnitude = 5.0;
        spec.amplitude_drift = rng.uniform(0.93, 1.07);
        const std::size_t cycles = n / p;
        while (spec.season_outlier_cycles.size() < i % 3) {
            const auto c = static_cast<std::size_t>(rng.below(cycles));
            if (std::find(spec.season_outlier_cycles.begin(), spec.season_outlier_cycles.end(), c) ==
                spec.season_outlier_cycles.end())
                spec.season_outlier_cycles.push_back(c);
        }
        spec.seed = rng.next();
        out.push_back(make_case("Complex", i, spec, {static_cast<double>(p)}));
    }
    return out;
}

std::vector<BenchmarkCase> ambiguous(SplitMix64& rng) {
    std::vector<BenchmarkCase> out;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto p = log_uniform_period(rng, 6.0, 150.0);
        const int m = static_cast<int>(2 + i % 3);
        const auto n = static_cast<std::size_t>(static_cast<double>(m * p) * rng.uniform(6.0, 12.0));
        SeriesSpec spec;
        spec.pattern = Pattern::TwoSinusoids;
        spec.period = static_cast<double>(m * p);
        spec.length = n;
        spec.primary_harmonic = m;
        spec.secondary_harmonic = 1;
        spec.secondary_amplitude = rng.uniform(0.5, 1.2);
        spec.secondary_phase = rng.uniform(0.0, 6.0);
        spec.noise_sigma = 0.05;
        spec.seed = rng.next();
        out.push_back(make_case("Ambiguous", i, spec, {static_cast<double>(p), static_cast<double>(m * p)}));
    }
    return out;
}

std::vector<BenchmarkCase> variations(SplitMix64& rng) {
    constexpr std::size_t kPeriods[] = {12, 30, 75, 200};
    constexpr Pattern kPatterns[] = {Pattern::Sinusoid, Pattern::Tile, Pattern::TwoSinusoids, Pattern::Tile};
    std::vector<BenchmarkCase> out;
    for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t p = kPeriods[b];
        const std::size_t n = 15 * p;
        SplitMix64 block_rng(rng.next());
        const auto base = seasonal_spec(block_rng, kPatterns[b], p, n);
        const std::uint64_t seed = rng.next();
        const double slope = rng.uniform(-3.0, 3.0) / static_cast<double>(n);
        for (std::size_t v = 0; v < 5; ++v) {
            auto spec = base;
            spec.seed = seed;
            if (v == 1) spec.outlier_count = n / 40;
            if (v == 2) spec.noise_sigma = 0.25;
            if (v == 3) spec.trend = {0.0, slope};
            if (v == 4) spec.amplitude_drift = 1.05;
            out.push_back(make_case("Variations", 5 * b + v, spec, {static_cast<double>(p)}));
        }
    }
    return out;
}

std::vector<BenchmarkCase> noise(SplitMix64& rng) {
    std::vector<BenchmarkCase> out;
    const std::uint64_t seed = rng.next();
    for (std::size_t k = 0; k < 10; ++k) {
        SeriesSpec spec;
        spec.pattern = Pattern::Sinusoid;
        spec.period = 40.0;
        spec.length = 1200;
        spec.noise_sigma = 0.25 * static_cast<double>(k);
        spec.seed = seed;
        out.push_back(make_case("Noise", k, spec, {40.0}));
    }
    return out;
}

std::vector<BenchmarkCase> length_family(SplitMix64& rng) {
    constexpr std::size_t kPeriods[] = {10, 18, 32, 56, 100, 180, 320, 560, 1000, 1800};
    std::vector<BenchmarkCase> out;
    for (std::size_t k = 0; k < 10; ++k) {
        SeriesSpec spec;
        spec.pattern = Pattern::TwoSinusoids;
        spec.period = static_cast<double>(kPeriods[k]);
        spec.length = 8 * kPeriods[k];
        spec.noise_sigma = 0.05;
        spec.seed = rng.next();
        out.push_back(make_case("Length", k, spec, {static_cast<double>(kPeriods[k])}));
    }
    return out;
}

std::vector<BenchmarkCase> no_season(SplitMix64& rng) {
    std::vector<BenchmarkCase> out;
    for (std::size_t i = 0; i < 10; ++i) {
        SeriesSpec spec;
        spec.length = static_cast<std::size_t>(rng.uniform(500.0, 3000.0));
        switch (i % 4) {
            case 0:
                spec.noise_sigma = 1.0;
                break;
            case 1:
                spec.noise_sigma = 1.0;
                spec.noise_kind = NoiseKind::RandomWalk;
                break;
            case 2: {
                const double slope = rng.uniform(-1.0, 1.0);
                spec.trend = {rng.uniform(-5.0, 5.0), slope};
                break;
            }
            default:
                spec.trend = {0.0, 0.0, rng.uniform(-1.0, 1.0) * 1e-3};
                break;
        }
        spec.seed = rng.next();
        out.push_back(make_case("NoSeason", i, spec, {}));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"Diverse", "Complex", "Ambiguous", "Variations",
                                                "Noise",   "Length",  "NoSeason"};
    return names;
}

std::vector<BenchmarkCase> gen_family(std::string_view name, std::uint64_t seed) {
    const auto& names = family_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
    const auto index = static_cast<std::uint64_t>(it - names.begin());
    SplitMix64 rng(seed ^ (kFamilyStride * (index + 1)));
    switch (index) {
        case 0: return diverse(rng);
        case 1: return complex_family(rng);
        case 2: return ambiguous(rng);
        case 3: return variations(rng);
        case 4: return noise(rng);
        case 5: return length_family(rng);
        default: return no_season(rng);
    }
}

}  // namespace seasonlen
