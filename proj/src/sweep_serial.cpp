#include <algorithm>
#include <cmath>
#include <limits>

#include "sweep_detail.hpp"

namespace sscdr::sweep {

namespace detail {

void accumulate_point(Reduction& acc, std::size_t i, const PointSample& p) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // NaN never wins a comparison; count it as an infinite residual.
    const double a = std::isnan(p.residual) ? kInf : std::abs(p.residual);
    const double rel = std::isnan(a / p.scale) ? kInf : a / p.scale;
    if (acc.count == 0 || a > acc.max_abs) {
        acc.max_abs = a;
        acc.worst_abs = i;
    }
    if (acc.count == 0 || rel > acc.max_rel) {
        acc.max_rel = rel;
        acc.worst_rel = i;
    }
    acc.max_scale = std::max(acc.max_scale, std::abs(p.scale));
    acc.sum_sq += a * a;
    ++acc.count;
}

}  // namespace detail

void Reduction::merge(const Reduction& other) {
    if (other.count == 0) {
        return;
    }
    if (count == 0) {
        *this = other;
        return;
    }
    // Strict comparisons keep the earliest index on ties.
    if (other.max_abs > max_abs) {
        max_abs = other.max_abs;
        worst_abs = other.worst_abs;
    }
    if (other.max_rel > max_rel) {
        max_rel = other.max_rel;
        worst_rel = other.worst_rel;
    }
    max_scale = std::max(max_scale, other.max_scale);
    sum_sq += other.sum_sq;
    count += other.count;
}

Reduction reduce_serial(std::size_t n, const SampleFn& sample) {
    Reduction acc;
    for (std::size_t i = 0; i < n; ++i) {
        detail::accumulate_point(acc, i, sample(i));
    }
    return acc;
}

void for_each_serial(std::size_t n, const IndexFn& body) {
    for (std::size_t i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace sscdr::sweep
