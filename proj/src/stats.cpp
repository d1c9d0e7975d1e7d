#include "bellsim/stats.hpp"

#include <cmath>

namespace bellsim {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kConvergence = 1e-15;

double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kConvergence) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
    // Modified Lentz evaluation of the standard continued fraction.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kConvergence) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) return std::nan("");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_continued_fraction(a, x);
}

double chi_square_p_value(double statistic, int degrees_of_freedom) {
    if (degrees_of_freedom <= 0) return 1.0;
    return regularized_gamma_q(0.5 * degrees_of_freedom, 0.5 * statistic);
}

GofReport chi_square_gof(const EmpiricalJoint& observed,
                         const std::vector<double>& expected, double significance) {
    GofReport report;
    int positive_cells = 0;
    double statistic = 0.0;
    for (size_t i = 0; i < expected.size(); ++i) {
        double p = expected[i];
        long long count = observed.counts[i];
        if (p == 0.0) {
            if (count != 0) report.impossible_outcome = true;
            continue;
        }
        ++positive_cells;
        double expect = p * static_cast<double>(observed.total);
        double diff = static_cast<double>(count) - expect;
        statistic += diff * diff / expect;
    }
    report.statistic = statistic;
    report.degrees_of_freedom = positive_cells > 0 ? positive_cells - 1 : 0;
    report.p_value = report.impossible_outcome
                         ? 0.0
                         : chi_square_p_value(statistic, report.degrees_of_freedom);
    report.pass = !report.impossible_outcome && report.p_value >= significance;
    return report;
}

}  // namespace bellsim
