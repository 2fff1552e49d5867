#include <omp.h>

#include <exception>
#include <vector>

#include "sweep_detail.hpp"

namespace sscdr::sweep {

int max_threads() { return omp_get_max_threads(); }

Reduction reduce_omp(std::size_t n, const SampleFn& sample) {
    const int threads = omp_get_max_threads();
    std::vector<Reduction> partial(static_cast<std::size_t>(threads));
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel num_threads(threads)
    {
        Reduction& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
        // Static schedule hands each thread one contiguous block, in thread order.
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                detail::accumulate_point(local, static_cast<std::size_t>(i), sample(static_cast<std::size_t>(i)));
            } catch (...) {
#pragma omp critical(sscdr_sweep_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Reduction total;
    for (const Reduction& r : partial) {
        total.merge(r);
    }
    return total;
}

void for_each_omp(std::size_t n, const IndexFn& body) {
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(sscdr_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace sscdr::sweep
