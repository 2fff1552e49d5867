#include "sscdr/catalog.hpp"

#include <stdexcept>

namespace sscdr::catalog {

quantum::FamilyPtr reference_family() { return quantum::make_radial_oscillator(1.0, 1.0); }

cdr::CdrSystem figure_system(int figure) {
    const cdr::CdrSystem fig1 = cdr::build_case_b(reference_family(), 1.0, 3, 1, 1, 3, 1.0, 3.0);
    switch (figure) {
        case 1:
            return fig1;
        case 2:
            return cdr::swap(fig1);
        default:
            throw std::invalid_argument("figure_system: figure must be 1 or 2");
    }
}

std::vector<NamedSystem> shipped_systems() {
    const quantum::FamilyPtr family = reference_family();
    return {
        {"fpe_ground", cdr::build_fpe(family, 0, 0, 1.0)},
        {"case_a_1_0", cdr::build_case_a(family, 1.0, 1, 0)},
        {"case_a_0_1", cdr::build_case_a(family, 1.0, 0, 1)},
        {"case_a_3_2", cdr::build_case_a(family, 1.0, 3, 2)},
        {"case_b_fig1", figure_system(1)},
        {"case_b_fig2", figure_system(2)},
    };
}

}  // namespace sscdr::catalog
