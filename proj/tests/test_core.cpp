#include "seasonlen/core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

using namespace seasonlen;

TEST(ValidateSeries, AcceptsWellFormedInput) {
    const std::vector<double> raw{0, 2, 1, 2, 0, 2, 1, 2};
    const auto s = validate_series(raw, 1.0);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s.delta(), 1.0);
    EXPECT_EQ(s[2], 1.0);
}

TEST(ValidateSeries, RejectsShortSeries) {
    try {
        (void)validate_series(std::vector<double>{1, 2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooShort);
    }
}

TEST(ValidateSeries, ReportsFirstNonFiniteIndex) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        (void)validate_series(std::vector<double>{1, nan, 3, INFINITY});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
        ASSERT_TRUE(e.index().has_value());
        EXPECT_EQ(*e.index(), 1u);
    }
}

TEST(ValidateSeries, RejectsNonPositiveDelta) {
    for (double d : {0.0, -1.0, std::numeric_limits<double>::quiet_NaN()}) {
        try {
            (void)validate_series(std::vector<double>{1, 2, 3, 4}, d);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NonPositiveDelta);
        }
    }
}

TEST(ValidateSeries, Idempotent) {
    const std::vector<double> raw{3, 1, 4, 1, 5, 9, 2, 6};
    const auto once = validate_series(raw, 0.5);
    const auto twice = validate_series(once.values(), once.delta());
    EXPECT_EQ(once, twice);
}

TEST(Error, MessageCarriesCodeName) {
    const Error e(ErrorCode::ZeroVariance, "flat");
    EXPECT_STREQ(e.what(), "ZeroVariance: flat");
    EXPECT_STREQ(to_string(ErrorCode::SeriesTooShortForFilter), "SeriesTooShortForFilter");
}

TEST(DetectionConfig, PublishedConstants) {
    const auto c = DetectionConfig::published_constants();
    EXPECT_EQ(c.filter_order, 2);
    EXPECT_DOUBLE_EQ(c.filter_cutoff, 0.001 * M_PI);
    EXPECT_DOUBLE_EQ(c.trend_log_threshold, std::exp(2.0));
    EXPECT_NEAR(c.trend_log_threshold, 7.389056, 1e-6);
    EXPECT_EQ(c.interp_factor, 4);
    EXPECT_DOUBLE_EQ(c.zero_tolerance_rel, 1e-4);
    EXPECT_DOUBLE_EQ(c.quotient_threshold, 0.5);
    EXPECT_EQ(c.min_zero_count, 3);
    EXPECT_NO_THROW(c.validate());
}

TEST(DetectionConfig, DefaultDiffersOnlyInCutoff) {
    auto c = DetectionConfig{};
    EXPECT_DOUBLE_EQ(c.filter_cutoff, 0.05 * M_PI);
    c.filter_cutoff = DetectionConfig::published_constants().filter_cutoff;
    EXPECT_EQ(c, DetectionConfig::published_constants());
}

TEST(DetectionConfig, ValidateRejectsOutOfDomainFields) {
    auto expect_invalid = [](auto mutate) {
        DetectionConfig c;
        mutate(c);
        try {
            c.validate();
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
        }
    };
    expect_invalid([](DetectionConfig& c) { c.interp_factor = 0; });
    expect_invalid([](DetectionConfig& c) { c.filter_order = 0; });
    expect_invalid([](DetectionConfig& c) { c.filter_cutoff = 0.0; });
    expect_invalid([](DetectionConfig& c) { c.filter_cutoff = M_PI; });
    expect_invalid([](DetectionConfig& c) { c.quotient_threshold = 0.0; });
    expect_invalid([](DetectionConfig& c) { c.quotient_threshold = 1.0; });
    expect_invalid([](DetectionConfig& c) { c.zero_tolerance_rel = -1e-3; });
    expect_invalid([](DetectionConfig& c) { c.min_zero_count = -1; });
}
