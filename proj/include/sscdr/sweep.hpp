#pragma once

/// @file sweep.hpp
/// @brief Data-parallel sweep kernels over flattened grids.
///
/// Each kernel has a serial reference implementation and an OpenMP one. Both
/// produce identical max/argmax results; the sum of squares may differ in
/// the last bits since the OpenMP version adds per-thread partials in thread
/// order. Exceptions thrown by the per-point callback are rethrown on the
/// calling thread.

#include <cstddef>
#include <functional>

namespace sscdr::sweep {

enum class Exec { Serial, Parallel };

/// One residual sample: the residual and the local magnitude it is judged against.
struct PointSample {
    double residual = 0.0;
    double scale = 1.0;
};

struct Reduction {
    std::size_t count = 0;
    double max_abs = 0.0;
    double sum_sq = 0.0;
    double max_rel = 0.0;
    double max_scale = 0.0;
    std::size_t worst_abs = 0;  ///< first index attaining max_abs
    std::size_t worst_rel = 0;  ///< first index attaining max_rel

    /// Folds `other`, which covers indices after this one's, into this reduction.
    void merge(const Reduction& other);
};

using SampleFn = std::function<PointSample(std::size_t)>;
using IndexFn = std::function<void(std::size_t)>;

Reduction reduce_serial(std::size_t n, const SampleFn& sample);
Reduction reduce_omp(std::size_t n, const SampleFn& sample);

void for_each_serial(std::size_t n, const IndexFn& body);
void for_each_omp(std::size_t n, const IndexFn& body);

inline Reduction reduce(std::size_t n, const SampleFn& sample, Exec exec = Exec::Parallel) {
    return exec == Exec::Serial ? reduce_serial(n, sample) : reduce_omp(n, sample);
}

inline void for_each(std::size_t n, const IndexFn& body, Exec exec = Exec::Parallel) {
    exec == Exec::Serial ? for_each_serial(n, body) : for_each_omp(n, body);
}

/// Threads the OpenMP kernels will use.
int max_threads();

}  // namespace sscdr::sweep
