#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sscdr/mathfn.hpp"

namespace mf = sscdr::mathfn;

TEST(Laguerre, LowDegreeValues) {
    EXPECT_DOUBLE_EQ(mf::laguerre(0, 0.5, 3.7), 1.0);
    EXPECT_DOUBLE_EQ(mf::laguerre(1, 0.5, 2.0), -0.5);
    // Series oracle: C(3.5,2) - C(3.5,1) + C(3.5,0)/2 = 4.375 - 3.5 + 0.5
    EXPECT_NEAR(sscdr::test::laguerre_series(2, 1.5, 1.0), 1.375, 1e-15);
    EXPECT_NEAR(mf::laguerre(2, 1.5, 1.0), 1.375, 1e-14);
}

TEST(Laguerre, RejectsParameterAtOrBelowMinusOne) {
    EXPECT_THROW(mf::laguerre(2, -1.0, 1.0), std::domain_error);
    EXPECT_THROW(mf::laguerre(2, -1.5, 1.0), std::domain_error);
    EXPECT_THROW(mf::laguerre_deriv(2, -1.0, 1.0), std::domain_error);
    EXPECT_THROW(mf::laguerre(-1, 0.5, 1.0), std::domain_error);
    EXPECT_NO_THROW(mf::laguerre(2, -0.999, 1.0));
}

TEST(Laguerre, RecurrenceMatchesSeries) {
    for (int n = 0; n <= 10; ++n) {
        for (double a : {0.5, 1.5, 2.5}) {
            for (int k = 0; k <= 60; ++k) {
                const double y = 0.5 * k;
                const double ref = sscdr::test::laguerre_series(n, a, y);
                const double bound = 1e-14 * sscdr::test::laguerre_series_magnitude(n, a, y);
                EXPECT_LE(std::abs(mf::laguerre(n, a, y) - ref), std::max(bound, 1e-13 * std::abs(ref)))
                    << "n=" << n << " a=" << a << " y=" << y;
            }
        }
    }
}

TEST(LaguerreDeriv, Values) {
    EXPECT_DOUBLE_EQ(mf::laguerre_deriv(0, 0.5, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(mf::laguerre_deriv(1, 0.5, 2.0), -1.0);
    // -L_1^{2.5}(1) = -(1 + 2.5 - 1); the central difference of the series agrees.
    const auto series = [](double y) { return sscdr::test::laguerre_series(2, 1.5, y); };
    EXPECT_NEAR(sscdr::test::central_diff(series, 1.0, 1e-6), -2.5, 1e-8);
    EXPECT_NEAR(mf::laguerre_deriv(2, 1.5, 1.0), -2.5, 1e-14);
}

TEST(LaguerreDeriv, MatchesDifferentiatedSeries) {
    for (int n = 0; n <= 10; ++n) {
        for (double a : {0.5, 1.5, 2.5}) {
            for (int k = 0; k <= 30; ++k) {
                const double y = 1.0 * k;
                const double ref = sscdr::test::laguerre_series_deriv(n, a, y);
                const double bound = 1e-14 * std::max(1.0, y) * sscdr::test::laguerre_series_magnitude(n, a, y);
                EXPECT_LE(std::abs(mf::laguerre_deriv(n, a, y) - ref), std::max(bound, 1e-13 * std::abs(ref)))
                    << "n=" << n << " a=" << a << " y=" << y;
            }
        }
    }
    const auto series = [](double v) { return sscdr::test::laguerre_series(4, 1.5, v); };
    EXPECT_NEAR(sscdr::test::central_diff(series, 2.0, 1e-5), mf::laguerre_deriv(4, 1.5, 2.0), 1e-8);
}

TEST(LogGamma, ClosedForms) {
    EXPECT_DOUBLE_EQ(mf::log_gamma(1.0), 0.0);
    EXPECT_NEAR(mf::log_gamma(2.5), std::log(3.0 * std::sqrt(std::numbers::pi) / 4.0), 1e-15);
    for (int k = 0; k <= 12; ++k) {
        const double ref = std::log(sscdr::test::gamma_half_integer(k));
        EXPECT_NEAR(mf::log_gamma(k + 0.5), ref, 1e-12 * std::max(1.0, std::abs(ref)));
    }
    // 7.3 = 0.3 + 7: Γ(7.3) = Γ(1.3) * prod_{j=1..6}(j + 0.3); reference value from a 30-digit evaluation.
    EXPECT_NEAR(mf::log_gamma(7.3), 7.14789252302224869, 1e-13);
}

TEST(LogGamma, RecursionProperty) {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> dist(0.5, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double x = dist(rng);
        const double ratio = std::exp(mf::log_gamma(x + 1.0) - mf::log_gamma(x));
        EXPECT_NEAR(ratio / x, 1.0, 1e-12) << "x=" << x;
    }
}

TEST(LogGamma, DomainError) {
    EXPECT_THROW(mf::log_gamma(0.0), std::domain_error);
    EXPECT_THROW(mf::log_gamma(-2.5), std::domain_error);
}

TEST(QuadratureSpec, RejectsNonPositive) {
    EXPECT_THROW(mf::QuadratureSpec(0.0, 1e-12, 10.0), std::invalid_argument);
    EXPECT_THROW(mf::QuadratureSpec(1e-12, -1.0, 10.0), std::invalid_argument);
    EXPECT_THROW(mf::QuadratureSpec(1e-12, 1e-12, 0.0), std::invalid_argument);
}

TEST(QuadratureSpec, GaussianDefaultTruncation) {
    const auto spec = mf::QuadratureSpec::for_gaussian_weight(1.0);
    EXPECT_NEAR(std::exp(-0.25 * std::pow(spec.truncation_x_max(), 2)), 1e-16, 1e-20);
    EXPECT_DOUBLE_EQ(spec.abs_tol(), 1e-12);
    EXPECT_DOUBLE_EQ(spec.rel_tol(), 1e-12);
}

TEST(Integrate, KnownIntegrals) {
    EXPECT_NEAR(mf::integrate([](double x) { return std::exp(-x); }, 0.0, {1e-12, 1e-12, 50.0}), 1.0, 1e-10);
    EXPECT_NEAR(mf::integrate([](double x) { return x * std::exp(-x * x); }, 0.0, {1e-12, 1e-12, 10.0}), 0.5, 1e-10);
}

TEST(Integrate, PolynomialTimesGaussian) {
    // int_0^inf x^{2k} e^{-x^2} dx = Γ(k + 1/2) / 2
    for (int k = 0; k <= 6; ++k) {
        const double v =
            mf::integrate([k](double x) { return std::pow(x, 2 * k) * std::exp(-x * x); }, 0.0, {1e-12, 1e-12, 12.0});
        EXPECT_NEAR(v, 0.5 * sscdr::test::gamma_half_integer(k), 1e-10) << "k=" << k;
    }
}

TEST(Integrate, TailCheckRejectsShortTruncation) {
    EXPECT_THROW(mf::integrate([](double x) { return std::exp(-x); }, 0.0, {1e-12, 1e-12, 5.0}), std::domain_error);
}

TEST(Integrate, NonConvergenceIsReported) {
    // Infinitely many oscillations near 0 cannot be resolved within the depth limit.
    const auto g = [](double x) { return x == 0.0 ? 0.0 : std::sin(1.0 / x) / x; };
    EXPECT_THROW(mf::integrate([&](double x) { return x > 1.0 ? 0.0 : g(x); }, 0.0, {1e-12, 1e-12, 2.0}),
                 mf::QuadratureError);
}

TEST(FdDerivative, PolynomialAndTrig) {
    const auto sq = [](double x) { return x * x; };
    for (double x : {-3.0, 0.0, 1.5, 7.0}) {
        EXPECT_NEAR(mf::fd_derivative(sq, x, 2, 1e-3), 2.0, 1e-8);
    }
    EXPECT_NEAR(mf::fd_derivative([](double x) { return std::sin(x); }, 0.0, 1, 1e-3), 1.0, 1e-12);
    EXPECT_THROW(mf::fd_derivative(sq, 0.0, 3, 1e-3), std::invalid_argument);
    EXPECT_THROW(mf::fd_derivative(sq, 0.0, 1, 0.0), std::invalid_argument);
}

TEST(FdDerivative, FourthOrderConvergence) {
    const auto f = [](double x) { return std::exp(std::sin(x)); };
    const double x = 0.7;
    const double exact1 = std::cos(x) * f(x);
    const double exact2 = (std::cos(x) * std::cos(x) - std::sin(x)) * f(x);
    const double e1a = std::abs(mf::fd_derivative(f, x, 1, 0.04) - exact1);
    const double e1b = std::abs(mf::fd_derivative(f, x, 1, 0.02) - exact1);
    const double e2a = std::abs(mf::fd_derivative(f, x, 2, 0.04) - exact2);
    const double e2b = std::abs(mf::fd_derivative(f, x, 2, 0.02) - exact2);
    EXPECT_NEAR(std::log2(e1a / e1b), 4.0, 0.2);
    EXPECT_NEAR(std::log2(e2a / e2b), 4.0, 0.2);
}

TEST(FdDerivative, DefaultStep) {
    EXPECT_DOUBLE_EQ(mf::default_fd_step(0.5), 1e-4);
    EXPECT_DOUBLE_EQ(mf::default_fd_step(-20.0), 2e-3);
}
