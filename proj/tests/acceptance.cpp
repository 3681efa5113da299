// Acceptance run: one pass/fail line per criterion, nonzero exit on any failure.

#include "seasonlen/autocorr.hpp"
#include "seasonlen/detrend.hpp"
#include "seasonlen/pipeline.hpp"
#include "seasonlen/preprocess.hpp"
#include "seasonlen/synthgen.hpp"
#include "seasonlen/zerocross.hpp"

#include "cli.hpp"
#include "oracles.hpp"
#include "property_cases.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace seasonlen;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool passed;
    std::string detail;
};

std::vector<double> values_of(const TimeSeries& s) { return {s.values().begin(), s.values().end()}; }

bool within(std::optional<double> got, double truth, double rel) {
    return got && std::abs(*got - truth) <= rel * truth;
}

Verdict worked_example() {
    const std::vector<double> d{281, 546, 697, 703, 704, 705, 706, 706, 1411, 1411, 2823};
    const auto start = Clock::now();
    std::vector<double> zeros{5.0};
    for (double v : d) zeros.push_back(zeros.back() + v);
    const auto a = analyze_zeros(zeros, 0.5, 1);
    const double elapsed = seconds_since(start);
    const bool ok = a.change_points == std::vector<std::size_t>{2, 8, 9, 10} && a.interval &&
                    *a.interval == std::pair<std::size_t, std::size_t>(2, 8) && a.member_count == 6 &&
                    a.season && *a.season == 1407.0 && elapsed < 1e-3;
    std::ostringstream s;
    s << "s = " << (a.season ? *a.season : NAN) << ", members " << a.member_count << ", " << elapsed * 1e3 << " ms";
    return {ok, s.str()};
}

Verdict oracle_golden() {
    const std::vector<double> y{0, 2, 1, 2, 0, 2, 1, 2};
    const auto start = Clock::now();
    const auto p = exact_season_oracle(y);
    const bool eight = satisfies_season_criteria(y, 8);
    const double elapsed = seconds_since(start);
    std::ostringstream s;
    s << "oracle " << (p ? static_cast<long>(*p) : -1L) << ", length 8 accepted " << eight << ", " << elapsed * 1e3
      << " ms";
    return {p == 4 && !eight && elapsed < 1e-3, s.str()};
}

Verdict sinusoid_sweep() {
    const auto start = Clock::now();
    bool ok = true;
    std::ostringstream s;
    for (double period : {8.0, 20.0, 50.0, 120.0, 500.0}) {
        DetectionConfig config;
        config.filter_cutoff = 0.2 * 2.0 * std::numbers::pi / period;
        const auto r = detect_season_length(validate_series(oracle::sine(period, 10 * std::size_t(period))), config);
        ok = ok && within(r.unscaled_length, period, 0.05);
        s << period << "->" << r.unscaled_length.value_or(NAN) << " ";
    }
    const double elapsed = seconds_since(start);
    s << elapsed << " s";
    return {ok && elapsed < 5.0, s.str()};
}

Verdict trend_robustness() {
    auto base = oracle::sine(50.0, 2000);
    auto linear = base, quadratic = base;
    for (std::size_t t = 0; t < base.size(); ++t) {
        linear[t] += 0.01 * double(t);
        quadratic[t] += 1e-5 * double(t) * double(t);
    }
    const auto a = detect_season_length(validate_series(linear));
    const auto b = detect_season_length(validate_series(quadratic));
    std::ostringstream s;
    s << "linear degree " << a.trend_degree << " s " << a.unscaled_length.value_or(NAN) << ", quadratic degree "
      << b.trend_degree << " s " << b.unscaled_length.value_or(NAN);
    return {a.trend_degree == 1 && b.trend_degree == 2 && within(a.unscaled_length, 50, 0.2) &&
                within(b.unscaled_length, 50, 0.2),
            s.str()};
}

Verdict noise_resilience() {
    bool ok = true;
    std::ostringstream s;
    for (double sigma : {0.1, 0.2, 0.3}) {
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SeriesSpec spec;
            spec.period = 50;
            spec.length = 2000;
            spec.noise_sigma = sigma;
            spec.seed = seed;
            hits += within(detect_season_length(generate(spec).series).unscaled_length, 50, 0.2);
        }
        ok = ok && hits >= 16;
        s << "sigma " << sigma << ": " << hits << "/20  ";
    }
    return {ok, s.str()};
}

Verdict no_season() {
    int none = 0;
    const auto cases = gen_family("NoSeason", 7);
    for (const auto& c : cases) none += !detect_season_length(c.series).seasonal();

    // Dense near-unit zero spacing, as produced by a quadratic, yields no season.
    std::vector<double> alpha;
    for (int k = 1; k < 400; ++k) alpha.push_back(0.97 * k + 0.02 * (k % 2));
    const auto a = analyze_zeros(alpha, 0.5, 4);
    const bool mechanism = !a.raw_distances.empty() && a.distances.empty() && !a.season;

    std::ostringstream s;
    s << none << "/" << cases.size() << " no-season, unit-distance mechanism " << (mechanism ? "ok" : "broken");
    return {none >= 6 && mechanism, s.str()};
}

Verdict aggregate_benchmark() {
    const fs::path dir = fs::temp_directory_path() / "seasonlen_acceptance_suite";
    fs::remove_all(dir);
    std::ostringstream out, err;
    auto call = [&](std::vector<std::string> args) {
        args.insert(args.begin(), "seasonlen");
        std::vector<const char*> argv;
        for (const auto& x : args) argv.push_back(x.c_str());
        return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    };
    if (call({"gen", "all", "--seed", "7", "--out", dir.string()}) != 0 ||
        call({"eval", (dir / "manifest.jsonl").string(), "--margin", "0.2"}) != 0) {
        return {false, "cli failed: " + err.str()};
    }
    std::ifstream records(dir / "records.jsonl");
    std::string line;
    int total = 0, autocorr = 0, periodogram = 0;
    while (std::getline(records, line)) {
        const auto rec = nlohmann::json::parse(line);
        const bool passed = rec["passed"].get<bool>();
        if (rec["detector"] == "autocorr") {
            ++total;
            autocorr += passed;
        } else {
            periodogram += passed;
        }
    }
    fs::remove_all(dir);
    const double rate = total ? double(autocorr) / total : 0.0;
    std::ostringstream s;
    s << "autocorr " << autocorr << "/" << total << ", periodogram " << periodogram << "/" << total;
    return {total > 0 && rate >= 0.7 && autocorr > periodogram, s.str()};
}

Verdict acf_correctness() {
    double worst = 0.0, worst_abs = 0.0, worst_lag0 = 0.0;
    for (std::uint64_t c = 0; c < 50; ++c) {
        SplitMix64 rng(c);
        std::vector<double> x(4 + rng.below(253));
        for (double& v : x) v = rng.normal() + 0.01 * double(&v - x.data());
        const auto fast = autocorrelation(x);
        const auto slow = oracle::direct_acf(x);
        worst_lag0 = std::max(worst_lag0, std::abs(fast[0] - 1.0));
        for (std::size_t k = 0; k < x.size(); ++k) {
            worst = std::max(worst, std::abs(fast[k] - slow[k]));
            worst_abs = std::max(worst_abs, std::abs(fast[k]));
        }
    }
    std::ostringstream s;
    s << "max diff " << worst << ", max |A| " << worst_abs;
    return {worst <= 1e-9 && worst_lag0 == 0.0 && worst_abs <= 1.0 + 1e-9, s.str()};
}

Verdict regression_correctness() {
    double worst_inner = 0.0;
    bool cost_ok = true;
    for (std::uint64_t c = 0; c < 50; ++c) {
        SplitMix64 rng(100 + c);
        std::vector<double> x(5 + rng.below(5000));
        const double curve = rng.uniform(-10, 10);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double u = double(i) / double(x.size());
            x[i] = curve * u * u + rng.uniform(-1, 1) * u + rng.normal();
        }
        const Eigen::Map<const Eigen::VectorXd> xv(x.data(), Eigen::Index(x.size()));
        double cost[3] = {};
        for (int degree : {1, 2}) {
            const auto model = fit_polynomial(x, degree);
            const auto r = remove_trend(x, model);
            const Eigen::Map<const Eigen::VectorXd> rv(r.data(), Eigen::Index(r.size()));
            const Eigen::MatrixXd design = design_matrix(x.size(), degree);
            for (Eigen::Index j = 0; j < design.cols(); ++j) {
                worst_inner = std::max(worst_inner, std::abs(rv.dot(design.col(j))) / (xv.norm() * design.col(j).norm()));
            }
            cost[degree] = model.cost;
        }
        cost_ok = cost_ok && cost[2] <= cost[1] * (1.0 + 1e-12);
    }
    std::ostringstream s;
    s << "max relative inner product " << worst_inner << ", costs ordered " << cost_ok;
    return {worst_inner <= 1e-8 && cost_ok, s.str()};
}

Verdict filter_correctness() {
    bool ok = true;
    double worst_dc = 0.0, worst_half = 0.0, worst_shift = 0.0, worst_edge = 0.0;
    for (double cutoff : {0.001 * std::numbers::pi, 0.05 * std::numbers::pi, 0.3, 1.5}) {
        for (int order : {1, 2, 3}) {
            const auto spec = design_butterworth_lowpass(order, cutoff);
            worst_dc = std::max(worst_dc, std::abs(std::abs(frequency_response(spec, 0.0)) - 1.0));
            worst_half = std::max(worst_half, std::abs(std::norm(frequency_response(spec, cutoff)) - 0.5));
            double previous = 2.0;
            for (int k = 0; k < 100; ++k) {
                const double gain = std::abs(frequency_response(spec, std::numbers::pi * k / 99.0));
                ok = ok && gain <= previous + 1e-12;
                previous = gain;
            }
        }
    }
    // Phases keep the end samples off exact zeros, where round-off alone
    // decides whether a crossing is counted.
    for (double period : {40.0, 200.0, 1000.0}) {
        for (double phase : {0.3, 1.1, 2.0, 4.0}) {
            const auto x = oracle::sine(period, std::size_t(8 * period), 1.0, phase);
            const auto y = apply_filter(x, design_butterworth_lowpass(2, 3.0 * 2.0 * std::numbers::pi / period));
            const auto zx = oracle::sign_changes(x), zy = oracle::sign_changes(y);
            if (zx.size() != zy.size()) {
                ok = false;
                continue;
            }
            for (std::size_t i = 0; i < zx.size(); ++i) {
                // Within half a period of either end the padding transient,
                // not the phase response, sets the crossing.
                const double shift = std::abs(zx[i] - zy[i]);
                const double margin = std::min(zx[i], double(x.size() - 1) - zx[i]);
                double& worst = margin < period / 2 ? worst_edge : worst_shift;
                worst = std::max(worst, shift);
            }
        }
    }
    std::ostringstream s;
    s << "dc " << worst_dc << ", half-power " << worst_half << ", shift " << worst_shift << " (edge crossings "
      << worst_edge << ")";
    return {ok && worst_dc <= 1e-6 && worst_half <= 1e-3 && worst_shift < 0.5, s.str()};
}

Verdict performance() {
    auto series = [](std::size_t n) {
        SeriesSpec spec;
        spec.period = 365;
        spec.length = n;
        spec.noise_sigma = 0.3;
        spec.trend = {0.0, 5.0 / double(n)};
        spec.seed = 11;
        return generate(spec).series;
    };
    auto best_of = [](const TimeSeries& s) {
        double best = 1e9;
        for (int k = 0; k < 5; ++k) {
            const auto start = Clock::now();
            (void)detect_season_length(s);
            best = std::min(best, seconds_since(start));
        }
        return best;
    };
    const double half = best_of(series(50'000));
    const double full = best_of(series(100'000));
    std::ostringstream s;
    s << "n=50k " << half << " s, n=100k " << full << " s, ratio " << full / half;
    return {full < 5.0 && full / half <= 2.6, s.str()};
}

Verdict invariance() {
    int failures = 0;
    for (std::uint64_t c = 0; c < 100; ++c) {
        const auto spec = props::random_spec(7000 + c);
        const auto g1 = generate(spec), g2 = generate(spec);
        const auto x = values_of(g1.series);
        failures += x != values_of(g2.series);

        SplitMix64 rng(c);
        const double scale = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
        const double offset = rng.uniform(-100.0, 100.0);
        std::vector<double> y(x);
        for (double& v : y) v = scale * v + offset;
        const auto a = detect_season_length(g1.series);
        const auto b = detect_season_length(validate_series(y));
        const auto again = detect_season_length(g1.series);
        const bool same = a.seasonal() == b.seasonal() && a.trend_degree == b.trend_degree &&
                          (!a.seasonal() || std::abs(*a.unscaled_length - *b.unscaled_length) <= 1e-6 * *a.unscaled_length) &&
                          a.unscaled_length == again.unscaled_length;
        failures += !same;
    }
    return {failures == 0, std::to_string(100 - failures) + "/100 cases invariant"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"worked distance example", worked_example},
        {"exact season oracle", oracle_golden},
        {"sinusoid sweep", sinusoid_sweep},
        {"trend robustness", trend_robustness},
        {"noise resilience", noise_resilience},
        {"no-season behaviour", no_season},
        {"aggregate synthetic benchmark", aggregate_benchmark},
        {"ACF correctness", acf_correctness},
        {"regression correctness", regression_correctness},
        {"filter correctness", filter_correctness},
        {"performance", performance},
        {"invariance suite", invariance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.passed;
        std::cout << (v.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << v.detail << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
