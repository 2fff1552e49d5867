// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "sscdr/catalog.hpp"
#include "sscdr/csv.hpp"
#include "sscdr/quantum.hpp"
#include "sscdr/verify.hpp"

namespace {

using sscdr::sweep::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "omp"); }

sscdr::verify::GridSpec grid(int nx, int nt) {
    sscdr::verify::GridSpec g;
    g.nx = nx;
    g.nt = nt;
    return g;
}

void BM_PdeResidual(benchmark::State& state) {
    const auto sys = sscdr::catalog::figure_system(1);
    const auto g = grid(static_cast<int>(state.range(1)), 50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sscdr::verify::pde_residual(sys, g, sscdr::verify::Mode::Analytic, 1e-4, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * g.nx * g.nt);
    label(state);
}

void BM_PdeResidualFd(benchmark::State& state) {
    const auto sys = sscdr::catalog::figure_system(1);
    const auto g = grid(static_cast<int>(state.range(1)), 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sscdr::verify::pde_residual(sys, g, sscdr::verify::Mode::FiniteDifference, 1e-3, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * g.nx * g.nt);
    label(state);
}

void BM_Schrodinger(benchmark::State& state) {
    const sscdr::quantum::Eigenstate u(sscdr::catalog::reference_family(), 3, 6);
    const auto g = grid(static_cast<int>(state.range(1)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sscdr::verify::schrodinger_residual(u, g, std::nullopt, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * g.nx);
    label(state);
}

void BM_SampleFields(benchmark::State& state) {
    const auto sys = sscdr::catalog::figure_system(2);
    const auto g = grid(static_cast<int>(state.range(1)), 50);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sscdr::io::sample_fields(sys, g, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * g.nx * g.nt);
    label(state);
}

void BM_Orthonormality(benchmark::State& state) {
    const auto fam = sscdr::catalog::reference_family();
    const int n_max = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sscdr::verify::orthonormality_matrix(fam, 1, n_max, exec_of(state)));
    }
    label(state);
}

}  // namespace

BENCHMARK(BM_PdeResidual)->ArgsProduct({{0, 1}, {200, 800}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PdeResidualFd)->ArgsProduct({{0, 1}, {200}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Schrodinger)->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleFields)->ArgsProduct({{0, 1}, {400}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Orthonormality)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
