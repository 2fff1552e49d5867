#pragma once

/// @file mathfn.hpp
/// @brief Special functions, adaptive quadrature and finite-difference kernels.
///
/// Everything here is a pure function of its arguments and safe to call
/// concurrently.

#include <functional>
#include <stdexcept>

namespace sscdr::mathfn {

using RealFn = std::function<double(double)>;

/// Raised when adaptive quadrature hits its subdivision limit before the
/// requested tolerance is met.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tolerances and half-line truncation for integrate().
class QuadratureSpec {
public:
    static constexpr double kDefaultTol = 1e-12;

    QuadratureSpec(double abs_tol, double rel_tol, double truncation_x_max);

    /// Defaults for a Gaussian-weighted integrand e^{-omega x^2/4}: the upper
    /// limit is where that factor drops below 1e-16.
    static QuadratureSpec for_gaussian_weight(double omega);

    double abs_tol() const noexcept { return abs_tol_; }
    double rel_tol() const noexcept { return rel_tol_; }
    double truncation_x_max() const noexcept { return x_max_; }

    QuadratureSpec with_truncation(double x_max) const { return {abs_tol_, rel_tol_, x_max}; }

private:
    double abs_tol_;
    double rel_tol_;
    double x_max_;
};

/// Generalized Laguerre polynomial L_n^a(y) by upward three-term recurrence.
/// Throws std::domain_error for a <= -1 or n < 0.
double laguerre(int n, double a, double y);

/// d/dy L_n^a(y) = -L_{n-1}^{a+1}(y); zero for n = 0.
double laguerre_deriv(int n, double a, double y);

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ∫_lower^{x_max} f(x) dx with adaptive Gauss–Kronrod (21 point).
///
/// Before integrating, |f(x_max)| must be below abs_tol, otherwise the
/// truncation would bias the result and std::domain_error is thrown.
/// Throws QuadratureError on non-convergence.
double integrate(const RealFn& f, double lower, const QuadratureSpec& spec);

/// Default step for fd_derivative: 1e-4 * max(1, |x|).
double default_fd_step(double x);

/// Fourth-order five-point central difference; order is 1 or 2.
double fd_derivative(const RealFn& f, double x, int order, double h);

}  // namespace sscdr::mathfn
