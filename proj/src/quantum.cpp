#include "sscdr/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sscdr/mathfn.hpp"

namespace sscdr::quantum {

namespace {

void require_index(int v, const char* what) {
    if (v < 0) {
        throw std::domain_error(std::string(what) + " must be nonnegative");
    }
}

}  // namespace

void OscillatorParams::validate() const {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("OscillatorParams: omega must be positive");
    }
    if (!(ell > 0.0)) {
        throw std::invalid_argument("OscillatorParams: ell must be positive");
    }
}

double base_potential(const OscillatorParams& params, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("base_potential: x must be positive");
    }
    const double w = params.omega;
    const double l = params.ell;
    return 0.25 * w * w * x * x + l * (l + 1.0) / (x * x) - w * (l + 1.5);
}

RadialOscillator::RadialOscillator(OscillatorParams params, double x_min) : params_(params), x_min_(x_min) {
    params_.validate();
    if (!(x_min > 0.0)) {
        throw std::invalid_argument("RadialOscillator: x_min must be positive");
    }
}

OscillatorParams RadialOscillator::params_at(int s) const {
    require_index(s, "chain index s");
    return {params_.omega, params_.ell + s};
}

double RadialOscillator::potential(int s, double x) const {
    require_index(s, "chain index s");
    // The remainder is s-independent, so the accumulated sum is 2 omega s.
    return base_potential(params_at(s), x) + remainder(0) * s;
}

double RadialOscillator::energy(int s, int n) const {
    require_index(s, "chain index s");
    require_index(n, "level n");
    return 2.0 * (n + s) * params_.omega;
}

double RadialOscillator::remainder(int s) const {
    require_index(s, "chain index s");
    return 2.0 * params_.omega;
}

double RadialOscillator::log_normalization(int s, int n) const {
    require_index(s, "chain index s");
    require_index(n, "level n");
    const double big_l = params_.ell + s;
    return 0.25 * std::log(2.0 * params_.omega) +
           0.5 * (mathfn::log_gamma(n + 1.0) - mathfn::log_gamma(n + big_l + 1.5));
}

StateEvaluator RadialOscillator::make_state(int s, int n) const {
    const double w = params_.omega;
    const double big_l = params_.ell + s;
    const double lag_a = big_l + 0.5;
    // q^{(L+1)/2} = (w/2)^{(L+1)/2} x^{L+1}, folded into the log prefactor.
    const double log_k = log_normalization(s, n) + 0.5 * (big_l + 1.0) * std::log(0.5 * w);
    const double x_floor = x_min_;

    return [=](double x) -> Jet {
        if (!(x >= x_floor)) {
            throw std::domain_error("radial oscillator state evaluated below x_min");
        }
        const double q = 0.5 * w * x * x;
        const double g = std::exp(log_k + (big_l + 1.0) * std::log(x) - 0.25 * w * x * x);
        // g'/g and its derivative
        const double a = (big_l + 1.0) / x - 0.5 * w * x;
        const double da = -(big_l + 1.0) / (x * x) - 0.5 * w;

        const double lag = mathfn::laguerre(n, lag_a, q);
        const double dlag = mathfn::laguerre_deriv(n, lag_a, q);
        const double d2lag = n >= 2 ? mathfn::laguerre(n - 2, lag_a + 2.0, q) : 0.0;
        const double h1 = dlag * w * x;
        const double h2 = d2lag * w * w * x * x + dlag * w;

        return {g * lag, g * (a * lag + h1), g * ((a * a + da) * lag + 2.0 * a * h1 + h2)};
    };
}

FamilyPtr make_radial_oscillator(double omega, double ell, double x_min) {
    return std::make_shared<const RadialOscillator>(OscillatorParams{omega, ell}, x_min);
}

double chain_potential(const ShapeInvariantFamily& family, int s, double x) { return family.potential(s, x); }

double chain_energy(const ShapeInvariantFamily& family, int s, int n) { return family.energy(s, n); }

Eigenstate::Eigenstate(FamilyPtr family, int s, int n, double amplitude)
    : family_(std::move(family)), s_(s), n_(n), amplitude_(amplitude) {
    if (!family_) {
        throw std::invalid_argument("Eigenstate: null family");
    }
    require_index(s, "chain index s");
    require_index(n, "level n");
    eval_ = family_->make_state(s, n);
}

Jet Eigenstate::jet(double x) const {
    const Jet j = eval_(x);
    return {amplitude_ * j.value, amplitude_ * j.d1, amplitude_ * j.d2};
}

Eigenstate Eigenstate::scaled(double factor) const {
    Eigenstate copy = *this;
    copy.amplitude_ *= factor;
    return copy;
}

Eigenstate eigenfunction(FamilyPtr family, int s, int n) { return Eigenstate(std::move(family), s, n); }

double darboux_partner(const RealFn& potential, const Eigenstate& ground, double x) {
    const Jet phi = ground.jet(x);
    if (!(phi.value > 0.0)) {
        throw std::domain_error("darboux_partner: seed state must be positive at x");
    }
    const double r = phi.d1 / phi.value;
    return potential(x) - 2.0 * (phi.d2 / phi.value - r * r);
}

double darboux_partner(const RealFn& potential, const RealFn& ground, double x, double h) {
    const double phi = ground(x);
    if (!(phi > 0.0)) {
        throw std::domain_error("darboux_partner: seed state must be positive at x");
    }
    const double r = mathfn::fd_derivative(ground, x, 1, h) / phi;
    const double curv = mathfn::fd_derivative(ground, x, 2, h) / phi;
    return potential(x) - 2.0 * (curv - r * r);
}

double darboux_state(const Eigenstate& seed, const Eigenstate& source, double x) {
    const Jet k = seed.jet(x);
    if (k.value == 0.0) {
        throw std::domain_error("darboux_state: seed state vanishes at x");
    }
    const Jet p = source.jet(x);
    return p.d1 - (k.d1 / k.value) * p.value;
}

double darboux_state(const RealFn& seed, const RealFn& source, double x, double h) {
    const double k = seed(x);
    if (k == 0.0) {
        throw std::domain_error("darboux_state: seed state vanishes at x");
    }
    const double dk = mathfn::fd_derivative(seed, x, 1, h);
    return mathfn::fd_derivative(source, x, 1, h) - (dk / k) * source(x);
}

}  // namespace sscdr::quantum
