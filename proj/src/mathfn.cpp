#include "sscdr/mathfn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace sscdr::mathfn {

QuadratureSpec::QuadratureSpec(double abs_tol, double rel_tol, double truncation_x_max)
    : abs_tol_(abs_tol), rel_tol_(rel_tol), x_max_(truncation_x_max) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(truncation_x_max > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: tolerances and truncation_x_max must be positive");
    }
}

QuadratureSpec QuadratureSpec::for_gaussian_weight(double omega) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: omega must be positive");
    }
    return {kDefaultTol, kDefaultTol, std::sqrt(4.0 * std::log(1e16) / omega)};
}

double laguerre(int n, double a, double y) {
    if (n < 0) {
        throw std::domain_error("laguerre: degree must be nonnegative");
    }
    if (!(a > -1.0)) {
        throw std::domain_error("laguerre: parameter a must exceed -1");
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 1.0 + a - y;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + a - y) * curr - (k - 1.0 + a) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

double laguerre_deriv(int n, double a, double y) {
    if (!(a > -1.0)) {
        throw std::domain_error("laguerre_deriv: parameter a must exceed -1");
    }
    if (n < 0) {
        throw std::domain_error("laguerre_deriv: degree must be nonnegative");
    }
    return n == 0 ? 0.0 : -laguerre(n - 1, a + 1.0, y);
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    return std::lgamma(x);
}

double integrate(const RealFn& f, double lower, const QuadratureSpec& spec) {
    const double upper = spec.truncation_x_max();
    if (!(upper > lower)) {
        throw std::domain_error("integrate: truncation_x_max must exceed the lower limit");
    }
    const double tail = std::abs(f(upper));
    if (!(tail < spec.abs_tol())) {
        throw std::domain_error("integrate: |f(x_max)| = " + std::to_string(tail) +
                                " is not below abs_tol; raise truncation_x_max");
    }

    constexpr unsigned kMaxDepth = 20;
    double error = 0.0;
    double l1 = 0.0;
    const double result = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        f, lower, upper, kMaxDepth, spec.rel_tol(), &error, &l1);
    if (!std::isfinite(result)) {
        throw QuadratureError("integrate: non-finite result");
    }
    if (error > std::max(spec.abs_tol(), spec.rel_tol() * l1)) {
        throw QuadratureError("integrate: subdivision limit reached with error estimate " +
                              std::to_string(error));
    }
    return result;
}

double default_fd_step(double x) { return 1e-4 * std::max(1.0, std::abs(x)); }

double fd_derivative(const RealFn& f, double x, int order, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("fd_derivative: step must be positive");
    }
    const double fm2 = f(x - 2.0 * h);
    const double fm1 = f(x - h);
    const double fp1 = f(x + h);
    const double fp2 = f(x + 2.0 * h);
    switch (order) {
        case 1:
            return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        case 2:
            return (-fm2 + 16.0 * fm1 - 30.0 * f(x) + 16.0 * fp1 - fp2) / (12.0 * h * h);
        default:
            throw std::invalid_argument("fd_derivative: order must be 1 or 2");
    }
}

}  // namespace sscdr::mathfn
