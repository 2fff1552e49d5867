#include "sscdr/cdr.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace sscdr::cdr {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Fpe:
            return "fpe";
        case CaseTag::CaseA:
            return "case_a";
        case CaseTag::CaseB:
            return "case_b";
    }
    return "unknown";
}

CdrSystem::CdrSystem(similarity::ScalingExponents exponents, CaseTag tag, quantum::Eigenstate y,
                     quantum::Eigenstate sigma, double energy_gap)
    : exponents_(exponents), tag_(tag), y_(std::move(y)), sigma_(std::move(sigma)), energy_gap_(energy_gap) {}

CdrSystem CdrSystem::with_variant(FormulaVariant variant) const {
    CdrSystem copy = *this;
    copy.variant_ = variant;
    return copy;
}

double CdrSystem::delta_potential(double z) const { return sigma_.potential(z) - y_.potential(z); }

double CdrSystem::reaction_from(const quantum::Jet& y, const quantum::Jet& sigma, double z) const {
    // Products are written symmetrically in (y, sigma) so that swap() negates R exactly.
    const double overlap = sigma.value * y.value;
    switch (tag_) {
        case CaseTag::Fpe:
            return 0.0;
        case CaseTag::CaseA:
            return -energy_gap_ * overlap;
        case CaseTag::CaseB:
            return delta_potential(z) * overlap;
    }
    return 0.0;
}

double CdrSystem::reaction_profile(double z) const { return reaction_from(y_.jet(z), sigma_.jet(z), z); }

ProfileSample CdrSystem::profiles(double z) const {
    ProfileSample p;
    p.y = y_.jet(z);
    p.sigma = sigma_.jet(z);
    const double a = exponents_.alpha;
    if (variant_.printed_convection) {
        p.tau = 2.0 * p.sigma.value + a * z;
        p.tau_deriv = 2.0 * p.sigma.d1 + a;
    } else {
        p.tau = 2.0 * p.sigma.d1 + a * z;
        p.tau_deriv = 2.0 * p.sigma.d2 + a;
    }
    p.reaction = reaction_from(p.y, p.sigma, z);
    return p;
}

double CdrSystem::reaction_exponent() const noexcept {
    return variant_.printed_reaction_exponent ? -(exponents_.alpha - 1.0) : exponents_.rho_exp;
}

FieldValues CdrSystem::fields(double x, double t) const {
    const double z = similarity::to_similarity(x, t, exponents_.alpha);
    const ProfileSample p = profiles(z);
    return {std::pow(t, exponents_.mu) * p.y.value, std::pow(t, exponents_.delta) * p.sigma.value,
            std::pow(t, exponents_.gamma) * p.tau, std::pow(t, reaction_exponent()) * p.reaction};
}

CdrSystem build_fpe(quantum::FamilyPtr family, int s, int n, double alpha) {
    quantum::Eigenstate state(std::move(family), s, n);
    return CdrSystem(similarity::exponents_for_class(alpha), CaseTag::Fpe, state, state, 0.0);
}

CdrSystem build_case_a(quantum::FamilyPtr family, double alpha, int n, int m, int s) {
    quantum::Eigenstate y(family, s, n);
    quantum::Eigenstate sigma(std::move(family), s, m);
    const double gap = sigma.energy() - y.energy();
    return CdrSystem(similarity::exponents_for_class(alpha), CaseTag::CaseA, std::move(y), std::move(sigma), gap);
}

CdrSystem build_case_b(quantum::FamilyPtr family, double alpha, int n, int s, int n_p, int s_p, double A, double B) {
    if (n + s != n_p + s_p) {
        throw ConstraintError("case_b requires equal energies, i.e. n + s == n' + s' (got " + std::to_string(n) +
                              " + " + std::to_string(s) + " vs " + std::to_string(n_p) + " + " +
                              std::to_string(s_p) + ")");
    }
    if (A == 0.0 || B == 0.0) {
        throw std::invalid_argument("case_b: constants A and B must be nonzero");
    }
    quantum::Eigenstate y(family, s, n, A);
    quantum::Eigenstate sigma(std::move(family), s_p, n_p, B);
    return CdrSystem(similarity::exponents_for_class(alpha), CaseTag::CaseB, std::move(y), std::move(sigma), 0.0);
}

FieldValues eval_fields(const CdrSystem& system, double x, double t) { return system.fields(x, t); }

CdrSystem swap(const CdrSystem& system) {
    if (system.case_tag() == CaseTag::Fpe) {
        throw std::invalid_argument("swap: FPE systems have y = sigma; nothing to exchange");
    }
    CdrSystem out(system.exponents_, system.tag_, system.sigma_, system.y_, -system.energy_gap_);
    out.variant_ = system.variant_;
    return out;
}

}  // namespace sscdr::cdr
