#pragma once

/// @file similarity.hpp
/// @brief Similarity scaling: exponent linkage, z = x / t^alpha, and lifting
/// z-profiles to (x, t) fields.

#include <functional>

namespace sscdr::similarity {

/// Powers of t attached to each scaling form.
///
///   P = t^mu y(z),  C = t^gamma tau(z),  D = t^delta sigma(z),  R = t^rho_exp rho(z)
///
/// Scale invariance fixes gamma = alpha - 1, delta = 2 alpha - 1 and
/// rho_exp = mu - 1, so alpha and mu are the only free exponents.
struct ScalingExponents {
    double alpha = 0.0;
    double mu = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double rho_exp = 0.0;

    /// Applies the linkage to a free (alpha, mu) pair.
    static ScalingExponents linked(double alpha, double mu);

    bool is_linked(double tol = 0.0) const;

    bool operator==(const ScalingExponents&) const = default;
};

/// Exponents of the solvable class: mu = -alpha.
ScalingExponents exponents_for_class(double alpha);

/// z = x / t^alpha. Throws std::domain_error for t <= 0.
double to_similarity(double x, double t, double alpha);

using Profile = std::function<double(double)>;
using Field = std::function<double(double, double)>;

/// f(x, t) = t^exponent * profile(x / t^alpha).
Field lift_field(double exponent, Profile profile, double alpha);

/// Bundles the exponents with the z-map; only valid for t > 0.
class SimilarityFrame {
public:
    explicit SimilarityFrame(ScalingExponents exponents) : exponents_(exponents) {}

    const ScalingExponents& exponents() const noexcept { return exponents_; }
    double z(double x, double t) const { return to_similarity(x, t, exponents_.alpha); }
    /// t^exponent; throws for t <= 0.
    double time_factor(double exponent, double t) const;

private:
    ScalingExponents exponents_;
};

}  // namespace sscdr::similarity
