#include "seasonlen/detrend.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace seasonlen {

namespace {

void check_degree(int degree) {
    if (degree != 1 && degree != 2) {
        throw Error(ErrorCode::DegreeUnsupported, "only degree 1 and 2 trends are supported");
    }
}

template <int Dim>
TrendModel solve_normal_equations(std::span<const double> values, int degree) {
    using Matrix = Eigen::Matrix<double, Dim, Dim>;
    using Vector = Eigen::Matrix<double, Dim, 1>;

    const std::size_t n = values.size();
    // Moments sum u^k for k = 0..2(Dim-1) and sum u^k x for k = 0..Dim-1.
    std::array<double, 2 * Dim - 1> moments{};
    Vector rhs = Vector::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        const double u = centered_time(i, n);
        double power = 1.0;
        for (int k = 0; k < 2 * Dim - 1; ++k) {
            moments[static_cast<std::size_t>(k)] += power;
            if (k < Dim) rhs(k) += power * values[i];
            power *= u;
        }
    }
    Matrix gram;
    for (int r = 0; r < Dim; ++r)
        for (int c = 0; c < Dim; ++c) gram(r, c) = moments[static_cast<std::size_t>(r + c)];

    const Eigen::LDLT<Matrix> ldlt(gram);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        ldlt.vectorD().minCoeff() <= std::numeric_limits<double>::epsilon() * ldlt.vectorD().maxCoeff()) {
        throw Error(ErrorCode::SingularSystem, "normal equations are singular");
    }
    const Vector theta = ldlt.solve(rhs);

    TrendModel model;
    model.degree = degree;
    model.length = n;
    model.coefficients.assign(theta.data(), theta.data() + Dim);
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = values[i] - model.evaluate(i);
        sse += r * r;
    }
    model.cost = sse / static_cast<double>(n);
    return model;
}

}  // namespace

double centered_time(std::size_t i, std::size_t n) {
    const double nd = static_cast<double>(n);
    return (static_cast<double>(i + 1) - (nd + 1.0) / 2.0) / nd;
}

double TrendModel::evaluate(std::size_t i) const {
    const double u = centered_time(i, length);
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * u + *it;
    return acc;
}

Eigen::MatrixXd design_matrix(std::size_t n, int degree) {
    check_degree(degree);
    if (n < static_cast<std::size_t>(degree) + 1) {
        throw Error(ErrorCode::InsufficientPoints, "need at least degree+1 observations");
    }
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), degree + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = centered_time(i, n);
        double power = 1.0;
        for (int c = 0; c <= degree; ++c) {
            x(static_cast<Eigen::Index>(i), c) = power;
            power *= u;
        }
    }
    return x;
}

TrendModel fit_polynomial(std::span<const double> values, int degree) {
    check_degree(degree);
    if (values.size() < static_cast<std::size_t>(degree) + 1) {
        throw Error(ErrorCode::InsufficientPoints, "need at least degree+1 observations");
    }
    return degree == 1 ? solve_normal_equations<2>(values, 1) : solve_normal_equations<3>(values, 2);
}

TrendModel fit_polynomial(const TimeSeries& series, int degree) {
    return fit_polynomial(series.values(), degree);
}

double trend_log_statistic(double linear_cost, double quadratic_cost, std::size_t n, double mean_square) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    const double gain = linear_cost - quadratic_cost;
    // The line already explains the data to machine precision.
    if (linear_cost <= 1e-24 * mean_square) return kNegInf;
    if (!(gain > 0.0)) return kNegInf;
    if (quadratic_cost <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log(static_cast<double>(n) * gain / quadratic_cost);
}

int select_trend_degree(std::span<const double> values, double k_trend) {
    const TrendModel linear = fit_polynomial(values, 1);
    const TrendModel quadratic = fit_polynomial(values, 2);
    double mean_square = 0.0;
    for (double v : values) mean_square += v * v;
    mean_square /= static_cast<double>(values.size());
    return trend_log_statistic(linear.cost, quadratic.cost, values.size(), mean_square) > k_trend ? 2 : 1;
}

int select_trend_degree(const TimeSeries& series, double k_trend) {
    return select_trend_degree(series.values(), k_trend);
}

std::vector<double> remove_trend(std::span<const double> values, const TrendModel& model) {
    if (values.size() != model.length) {
        throw Error(ErrorCode::LengthMismatch, "model was fitted on " + std::to_string(model.length) +
                                                   " observations, series has " +
                                                   std::to_string(values.size()));
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] - model.evaluate(i);
    return out;
}

TimeSeries remove_trend(const TimeSeries& series, const TrendModel& model) {
    const auto residual = remove_trend(series.values(), model);
    return validate_series(residual, series.delta());
}

}  // namespace seasonlen
