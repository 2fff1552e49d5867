#pragma once

/// @file cdr.hpp
/// @brief Exactly solvable convection–diffusion–reaction systems in similarity form.
///
/// Every system here solves
///
///   dP/dt = -d/dx (C P) + d^2/dx^2 (D P) + R
///
/// with P = t^mu y(z), D = t^delta sigma(z), C = t^gamma tau(z),
/// R = t^rho_exp rho(z), z = x / t^alpha, mu = -alpha and
/// tau = 2 sigma' + alpha z. The reduced equation is then
/// sigma y'' - sigma'' y + rho = 0, and the three builders pick y, sigma and
/// rho so that it holds identically:
///
///   FPE     y = sigma = u_n^(s),                      rho = 0
///   Case A  y = u_n, sigma = u_m (same potential),    rho = -(E_m - E_n) sigma y
///   Case B  y = A u_n^(s), sigma = B u_n'^(s'),        rho = (V_s' - V_s) sigma y
///           with n + s = n' + s' so both share one energy.

#include <stdexcept>
#include <string_view>

#include "sscdr/quantum.hpp"
#include "sscdr/similarity.hpp"

namespace sscdr::cdr {

enum class CaseTag { Fpe, CaseA, CaseB };

std::string_view to_string(CaseTag tag);

/// Thrown by build_case_b when n + s != n' + s'.
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Alternative closed forms that do NOT solve the equation. They exist only
/// so the residual checks can show that they fail.
struct FormulaVariant {
    /// R carries t^{-(alpha-1)} instead of t^{mu-1} = t^{-alpha-1}.
    bool printed_reaction_exponent = false;
    /// C uses 2 sigma + alpha z instead of 2 sigma' + alpha z.
    bool printed_convection = false;

    bool operator==(const FormulaVariant&) const = default;
};

struct FieldValues {
    double P = 0.0;
    double D = 0.0;
    double C = 0.0;
    double R = 0.0;
};

/// All z-profiles of a system at one point.
struct ProfileSample {
    quantum::Jet y;
    quantum::Jet sigma;
    double tau = 0.0;
    double tau_deriv = 0.0;
    double reaction = 0.0;
};

class CdrSystem {
public:
    const similarity::ScalingExponents& exponents() const noexcept { return exponents_; }
    double alpha() const noexcept { return exponents_.alpha; }
    CaseTag case_tag() const noexcept { return tag_; }

    /// y = A u_n^(s) and sigma = B u_n'^(s'), amplitudes included.
    const quantum::Eigenstate& y_state() const noexcept { return y_; }
    const quantum::Eigenstate& sigma_state() const noexcept { return sigma_; }
    const quantum::ShapeInvariantFamily& family() const noexcept { return y_.family(); }

    double A() const noexcept { return y_.amplitude(); }
    double B() const noexcept { return sigma_.amplitude(); }
    int n() const noexcept { return y_.level(); }
    int s() const noexcept { return y_.chain_index(); }
    int n_prime() const noexcept { return sigma_.level(); }
    int s_prime() const noexcept { return sigma_.chain_index(); }

    /// Energy of the y equation, E_n^(s).
    double energy() const { return y_.energy(); }
    /// E_sigma - E_y; nonzero only for Case A.
    double energy_gap() const noexcept { return energy_gap_; }

    const FormulaVariant& variant() const noexcept { return variant_; }
    CdrSystem with_variant(FormulaVariant variant) const;

    ProfileSample profiles(double z) const;
    double reaction_profile(double z) const;
    /// V_s'(z) - V_s(z), the potential offset between the sigma and y equations.
    double delta_potential(double z) const;

    /// Time factors t^exponent actually used by fields() (variant aware).
    double reaction_exponent() const noexcept;

    FieldValues fields(double x, double t) const;

private:
    CdrSystem(similarity::ScalingExponents exponents, CaseTag tag, quantum::Eigenstate y, quantum::Eigenstate sigma,
              double energy_gap);

    double reaction_from(const quantum::Jet& y, const quantum::Jet& sigma, double z) const;

    friend CdrSystem build_fpe(quantum::FamilyPtr, int, int, double);
    friend CdrSystem build_case_a(quantum::FamilyPtr, double, int, int, int);
    friend CdrSystem build_case_b(quantum::FamilyPtr, double, int, int, int, int, double, double);
    friend CdrSystem swap(const CdrSystem&);

    similarity::ScalingExponents exponents_;
    CaseTag tag_;
    quantum::Eigenstate y_;
    quantum::Eigenstate sigma_;
    double energy_gap_;
    FormulaVariant variant_{};
};

/// Reaction-free case: y = sigma = u_n^(s).
CdrSystem build_fpe(quantum::FamilyPtr family, int s, int n, double alpha);

/// Two levels of one potential: y = u_n^(s), sigma = u_m^(s).
CdrSystem build_case_a(quantum::FamilyPtr family, double alpha, int n, int m, int s = 0);

/// SUSY partners: y = A u_n^(s), sigma = B u_{n_p}^(s_p).
/// Throws ConstraintError unless n + s == n_p + s_p, and std::invalid_argument
/// for A == 0 or B == 0.
CdrSystem build_case_b(quantum::FamilyPtr family, double alpha, int n, int s, int n_p, int s_p, double A = 1.0,
                       double B = 1.0);

FieldValues eval_fields(const CdrSystem& system, double x, double t);

/// Exchanges the roles of y and sigma, (n, s, A) <-> (n', s', B).
/// Throws std::invalid_argument for FPE systems.
CdrSystem swap(const CdrSystem& system);

}  // namespace sscdr::cdr
