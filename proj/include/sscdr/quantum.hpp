#pragma once

/// @file quantum.hpp
/// @brief Shape-invariant potential chains, closed-form eigenstates, and the
/// Darboux transformation.
///
/// A shape-invariant family is a chain of potentials V_s (s = 0, 1, 2, ...)
/// obtained by repeated SUSY partnering of V_0. Member s has spectrum
/// E_n^(s) = E_{n+s}^(0) and eigenfunctions u_n^(s)(x; a_0) = u_n^(0)(x; a_s),
/// where a_s is the parameter set after s constant shifts. Units are
/// hbar = 2m = 1, so H = -d^2/dx^2 + V.
///
/// Only the radial oscillator ships. Other families plug in by deriving from
/// ShapeInvariantFamily.

#include <functional>
#include <memory>
#include <string>

namespace sscdr::quantum {

/// Value with first and second x-derivatives.
struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

using StateEvaluator = std::function<Jet(double)>;
using RealFn = std::function<double(double)>;

class ShapeInvariantFamily {
public:
    virtual ~ShapeInvariantFamily() = default;

    virtual std::string name() const = 0;

    /// Smallest x at which eigenstates may be evaluated.
    virtual double x_min() const noexcept = 0;

    /// V_s(x), including the accumulated remainders sum_{k<s} R(a_k).
    virtual double potential(int s, double x) const = 0;

    /// E_n^(s).
    virtual double energy(int s, int n) const = 0;

    /// R(a_s): the constant by which the partner of member s exceeds V_0(.; a_{s+1}).
    virtual double remainder(int s) const = 0;

    /// Normalized u_n^(s) with analytic derivatives.
    virtual StateEvaluator make_state(int s, int n) const = 0;

    /// Gaussian decay rate used to pick default quadrature truncation.
    virtual double decay_rate() const noexcept = 0;
};

/// a_0 = (omega, ell); both strictly positive.
struct OscillatorParams {
    double omega = 1.0;
    double ell = 1.0;

    void validate() const;
};

/// V_0(x) = omega^2 x^2 / 4 + ell (ell + 1) / x^2 - omega (ell + 3/2), x > 0.
double base_potential(const OscillatorParams& params, double x);

/// Radial oscillator chain: a_s = (omega, ell + s), R(a_s) = 2 omega,
/// E_n^(s) = 2 (n + s) omega.
class RadialOscillator final : public ShapeInvariantFamily {
public:
    static constexpr double kDefaultXMin = 1e-3;

    explicit RadialOscillator(OscillatorParams params, double x_min = kDefaultXMin);

    const OscillatorParams& params() const noexcept { return params_; }
    OscillatorParams params_at(int s) const;

    std::string name() const override { return "radial_oscillator"; }
    double x_min() const noexcept override { return x_min_; }
    double potential(int s, double x) const override;
    double energy(int s, int n) const override;
    double remainder(int s) const override;
    StateEvaluator make_state(int s, int n) const override;
    double decay_rate() const noexcept override { return params_.omega; }

    /// ln N for u_n^(s): N = (2 omega)^{1/4} [n! / Γ(n + L + 3/2)]^{1/2}, L = ell + s.
    double log_normalization(int s, int n) const;

private:
    OscillatorParams params_;
    double x_min_;
};

using FamilyPtr = std::shared_ptr<const ShapeInvariantFamily>;

FamilyPtr make_radial_oscillator(double omega, double ell, double x_min = RadialOscillator::kDefaultXMin);

double chain_potential(const ShapeInvariantFamily& family, int s, double x);
double chain_energy(const ShapeInvariantFamily& family, int s, int n);

/// amplitude * u_n^(s); immutable, cheap to copy, safe to share across threads.
class Eigenstate {
public:
    Eigenstate(FamilyPtr family, int s, int n, double amplitude = 1.0);

    int chain_index() const noexcept { return s_; }
    int level() const noexcept { return n_; }
    double amplitude() const noexcept { return amplitude_; }
    const ShapeInvariantFamily& family() const noexcept { return *family_; }
    const FamilyPtr& family_ptr() const noexcept { return family_; }

    Jet jet(double x) const;
    double operator()(double x) const { return jet(x).value; }
    double d1(double x) const { return jet(x).d1; }
    double d2(double x) const { return jet(x).d2; }

    /// E_n^(s) of the Hamiltonian this state belongs to.
    double energy() const { return family_->energy(s_, n_); }
    /// V_s at x.
    double potential(double x) const { return family_->potential(s_, x); }

    Eigenstate scaled(double factor) const;

private:
    FamilyPtr family_;
    int s_;
    int n_;
    double amplitude_;
    StateEvaluator eval_;
};

Eigenstate eigenfunction(FamilyPtr family, int s, int n);

/// V0(x) - 2 (ln phi)''(x) with (ln phi)'' from phi's analytic jet.
/// Throws std::domain_error unless phi(x) > 0.
double darboux_partner(const RealFn& potential, const Eigenstate& ground, double x);

/// Same transform with (ln phi)'' from fourth-order finite differences.
double darboux_partner(const RealFn& potential, const RealFn& ground, double x, double h);

/// phi'(x) - (ln phi_k)'(x) phi(x). Throws std::domain_error where phi_k(x) = 0.
double darboux_state(const Eigenstate& seed, const Eigenstate& source, double x);

/// Finite-difference variant for plain callables.
double darboux_state(const RealFn& seed, const RealFn& source, double x, double h);

}  // namespace sscdr::quantum
