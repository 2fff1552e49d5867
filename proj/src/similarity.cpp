#include "sscdr/similarity.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sscdr::similarity {

namespace {

void require_positive_time(double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("similarity: t must be positive");
    }
}

}  // namespace

ScalingExponents ScalingExponents::linked(double alpha, double mu) {
    return {alpha, mu, alpha - 1.0, 2.0 * alpha - 1.0, mu - 1.0};
}

bool ScalingExponents::is_linked(double tol) const {
    return std::abs(gamma - (alpha - 1.0)) <= tol && std::abs(delta - (2.0 * alpha - 1.0)) <= tol &&
           std::abs(rho_exp - (mu - 1.0)) <= tol;
}

ScalingExponents exponents_for_class(double alpha) { return ScalingExponents::linked(alpha, -alpha); }

double to_similarity(double x, double t, double alpha) {
    require_positive_time(t);
    return x / std::pow(t, alpha);
}

Field lift_field(double exponent, Profile profile, double alpha) {
    return [exponent, alpha, profile = std::move(profile)](double x, double t) {
        require_positive_time(t);
        return std::pow(t, exponent) * profile(x / std::pow(t, alpha));
    };
}

double SimilarityFrame::time_factor(double exponent, double t) const {
    require_positive_time(t);
    return std::pow(t, exponent);
}

}  // namespace sscdr::similarity
