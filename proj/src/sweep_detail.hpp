#pragma once

#include "sscdr/sweep.hpp"

namespace sscdr::sweep::detail {

/// Folds sample i into acc; the first index wins ties.
void accumulate_point(Reduction& acc, std::size_t i, const PointSample& p);

}  // namespace sscdr::sweep::detail
