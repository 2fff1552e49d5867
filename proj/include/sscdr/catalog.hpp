#pragma once

/// @file catalog.hpp
/// @brief The systems this project ships and checks by default.

#include <array>
#include <string>
#include <vector>

#include "sscdr/cdr.hpp"
#include "sscdr/quantum.hpp"

namespace sscdr::catalog {

/// Snapshot times of the two figure datasets.
inline constexpr std::array<double, 3> kFigureTimes{0.3, 1.0, 2.0};

/// Radial oscillator with omega = ell = 1.
quantum::FamilyPtr reference_family();

/// Figure 1: alpha = 1, (n, s, A) = (3, 1, 1), (n', s', B) = (1, 3, 3).
/// Figure 2 is the same system with the two parameter sets interchanged.
cdr::CdrSystem figure_system(int figure);

struct NamedSystem {
    std::string name;
    cdr::CdrSystem system;
};

/// FPE (ground state), Case A for (n, m) in {(1,0), (0,1), (3,2)}, and both
/// figure systems; all on the reference family with alpha = 1.
std::vector<NamedSystem> shipped_systems();

}  // namespace sscdr::catalog
