#include "seasonlen/autocorr.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace seasonlen;

TEST(Autocorrelation, LagZeroIsOne) {
    const auto a = autocorrelation(oracle::gaussian(100, 9));
    EXPECT_EQ(a[0], 1.0);
    EXPECT_FALSE(a.detrended);
    EXPECT_EQ(a.size(), 100u);
}

TEST(Autocorrelation, CosineQuarterAndFullPeriod) {
    std::vector<double> x(400);
    for (std::size_t t = 0; t < x.size(); ++t) x[t] = std::cos(2.0 * M_PI * double(t + 1) / 20.0);
    const auto a = autocorrelation(x);
    EXPECT_LE(a[10], -0.9);
    EXPECT_GE(a[20], 0.9);
}

TEST(Autocorrelation, MatchesDirectSum) {
    for (std::size_t n : {4u, 5u, 17u, 64u, 100u, 255u}) {
        const auto x = oracle::gaussian(n, n);
        const auto fast = autocorrelation(x);
        const auto slow = oracle::direct_acf(x);
        for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(fast[k], slow[k], 1e-9) << "n " << n << " lag " << k;
    }
}

TEST(Autocorrelation, ZeroVariance) {
    try {
        (void)autocorrelation(std::vector<double>(16, 2.5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroVariance);
    }
}

TEST(Autocorrelation, ScaleAndShiftInvariant) {
    const auto x = oracle::gaussian(128, 4);
    const auto base = autocorrelation(x);
    for (double c : {-3.0, 1e-6, 250.0}) {
        std::vector<double> scaled(x), shifted(x);
        for (auto& v : scaled) v *= c;
        for (auto& v : shifted) v += c;
        const auto as = autocorrelation(scaled), ah = autocorrelation(shifted);
        for (std::size_t k = 0; k < x.size(); ++k) {
            EXPECT_NEAR(as[k], base[k], 1e-9);
            EXPECT_NEAR(ah[k], base[k], 1e-9);
        }
    }
}

TEST(DetrendAcf, LongSinusoidBarelyChanges) {
    const auto a = autocorrelation(oracle::sine(50.0, 5000));
    const auto d = detrend_acf(a);
    EXPECT_TRUE(d.detrended);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LT(std::abs(d[k] - a[k]), 0.05);
}

TEST(DetrendAcf, RemovesExactLine) {
    AcfSeries a;
    const std::size_t n = 101;
    for (std::size_t k = 0; k < n; ++k) a.values.push_back(0.5 - double(k) / (2.0 * double(n - 1)));
    for (double v : detrend_acf(a).values) EXPECT_LT(std::abs(v), 1e-9);
}

TEST(DetrendAcf, TwiceIsAnError) {
    const auto d = detrend_acf(autocorrelation(oracle::gaussian(50, 1)));
    try {
        (void)detrend_acf(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AlreadyDetrended);
    }
}

TEST(DetrendAcf, SineZerosNearQuarterPeriods) {
    const double p = 40.0;
    const auto d = detrend_acf(autocorrelation(oracle::sine(p, 400)));
    const auto z = oracle::sign_changes(d.values);
    for (double target : {p / 4, 3 * p / 4}) {
        double best = INFINITY;
        for (double v : z) best = std::min(best, std::abs(v - target));
        EXPECT_LT(best, 1.0) << target;
    }
}
