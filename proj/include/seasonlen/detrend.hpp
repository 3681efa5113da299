#pragma once

#include "seasonlen/core.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace seasonlen {

/// Least-squares polynomial trend. Coefficients are constant-term first and
/// refer to the centered, scaled time index u_i = (i - (n+1)/2) / n, i = 1..n.
struct TrendModel {
    int degree = 1;
    std::vector<double> coefficients;
    /// Mean squared error of the fit.
    double cost = 0.0;
    /// Number of observations the model was fitted on.
    std::size_t length = 0;

    /// Trend value at zero-based position i.
    [[nodiscard]] double evaluate(std::size_t i) const;
};

/// Centered time coordinate of zero-based position i in a series of length n.
[[nodiscard]] double centered_time(std::size_t i, std::size_t n);

/// n x (degree+1) design matrix over the centered time basis.
[[nodiscard]] Eigen::MatrixXd design_matrix(std::size_t n, int degree);

/// Solves the (degree+1)-dimensional normal equations in O(n).
[[nodiscard]] TrendModel fit_polynomial(std::span<const double> values, int degree);
[[nodiscard]] TrendModel fit_polynomial(const TimeSeries& series, int degree);

/// Statistic compared against the trend threshold: ln(n (C1 - C2) / C2).
/// Returns -inf when the quadratic term buys nothing above round-off and
/// +inf when the quadratic fit is exact.
[[nodiscard]] double trend_log_statistic(double linear_cost, double quadratic_cost, std::size_t n,
                                         double mean_square);

/// 2 when a quadratic trend is justified by trend_log_statistic > k_trend, else 1.
[[nodiscard]] int select_trend_degree(std::span<const double> values, double k_trend);
[[nodiscard]] int select_trend_degree(const TimeSeries& series, double k_trend);

/// values - X theta. Throws LengthMismatch if the model was fitted on a different length.
[[nodiscard]] std::vector<double> remove_trend(std::span<const double> values, const TrendModel& model);
[[nodiscard]] TimeSeries remove_trend(const TimeSeries& series, const TrendModel& model);

}  // namespace seasonlen
