#pragma once

#include "seasonlen/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seasonlen {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// two xor-shift-multiply rounds. Gaussians use the Marsaglia polar method.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept;
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) noexcept;
    double normal() noexcept;

private:
    std::uint64_t state_;
    std::optional<double> spare_;
};

enum class Pattern { Sinusoid, Tile, TwoSinusoids };
enum class NoiseKind { White, RandomWalk };

struct SeriesSpec {
    Pattern pattern = Pattern::Sinusoid;
    /// Reference season length; absent for a series without seasonal part.
    std::optional<double> period;
    std::size_t length = 0;
    /// Explicit repeating block for Pattern::Tile; its size is the period.
    std::vector<double> tile;
    /// TwoSinusoids: sin(2 pi h1 t / P) + amp * sin(2 pi h2 t / P + phase).
    int primary_harmonic = 1;
    int secondary_harmonic = 2;
    double secondary_amplitude = 0.5;
    double secondary_phase = 1.0;
    /// c0 + c1 t + c2 t^2 over zero-based t; at most three coefficients.
    std::vector<double> trend;
    double noise_sigma = 0.0;
    NoiseKind noise_kind = NoiseKind::White;
    std::size_t outlier_count = 0;
    double outlier_magnitude = 5.0;
    /// Seasonal part of cycle c is scaled by amplitude_drift^c.
    double amplitude_drift = 1.0;
    /// Cycles whose seasonal part is replaced by N(0, 0.5^2) draws.
    std::vector<std::size_t> season_outlier_cycles;
    std::uint64_t seed = 0;
};

struct GeneratedSeries {
    TimeSeries series;
    std::optional<double> reference;
};

/// Throws InvalidSpec when the spec breaks its invariants.
[[nodiscard]] GeneratedSeries generate(const SeriesSpec& spec);

struct BenchmarkCase {
    std::string family;
    std::string label;
    TimeSeries series;
    /// Acceptable season lengths; empty means no seasonality.
    std::vector<double> references;
};

/// Diverse, Complex, Ambiguous, Variations, Noise, Length, NoSeason.
[[nodiscard]] const std::vector<std::string>& family_names();

/// Throws UnknownFamily.
[[nodiscard]] std::vector<BenchmarkCase> gen_family(std::string_view name, std::uint64_t seed);

}  // namespace seasonlen
