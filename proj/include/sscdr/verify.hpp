#pragma once

/// @file verify.hpp
/// @brief Independent numerical oracles for the closed-form constructions.
///
/// Residual sweeps run through sweep::reduce and default to the OpenMP kernel;
/// pass sweep::Exec::Serial for the reference path.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sscdr/cdr.hpp"
#include "sscdr/quantum.hpp"
#include "sscdr/sweep.hpp"

namespace sscdr::verify {

enum class Mode { Analytic, FiniteDifference };

std::string_view to_string(Mode mode);

/// Tensor grid over x in [x_min, x_max] and t in [t_min, t_max]; x = 0 is excluded.
struct GridSpec {
    double x_min = 0.2;
    double x_max = 8.0;
    int nx = 400;
    double t_min = 0.5;
    double t_max = 2.5;
    int nt = 200;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;

    std::vector<double> xs() const;
    /// nt points, or the single t_min when t_min == t_max.
    std::vector<double> ts() const;
};

std::vector<double> linspace(double lo, double hi, int n);

struct GridPoint {
    double x = 0.0;
    double t = 0.0;
};

struct ResidualReport {
    double max_abs = 0.0;
    /// Root mean square over the samples.
    double l2 = 0.0;
    double max_rel = 0.0;
    GridPoint worst_point;
    Mode mode = Mode::Analytic;
    std::size_t samples = 0;
};

/// r(x) = -u'' + (V_s - E) u on the grid's x points. max_rel is max|r| / max|u|.
/// `energy` replaces E_n^(s) when given.
ResidualReport schrodinger_residual(const quantum::Eigenstate& state, const GridSpec& grid,
                                    std::optional<double> energy = std::nullopt,
                                    sweep::Exec exec = sweep::Exec::Parallel);

using ProfileFn = std::function<cdr::ProfileSample(double)>;

/// Reduced similarity ODE
///   sigma y'' + (2 sigma' + alpha z - tau) y' - (tau' + mu - sigma'') y + rho
/// on z_grid. max_rel divides each point by the largest of its four term
/// magnitudes (floored at 1e-30).
ResidualReport ode_residual(const ProfileFn& profiles, double alpha, double mu, std::span<const double> z_grid,
                            sweep::Exec exec = sweep::Exec::Parallel);

ResidualReport ode_residual(const cdr::CdrSystem& system, std::span<const double> z_grid,
                            sweep::Exec exec = sweep::Exec::Parallel);

/// The four terms of dP/dt + d(CP)/dx - d2(DP)/dx2 - R at one point.
struct PdeTerms {
    double P = 0.0;
    double dP_dt = 0.0;
    double dCP_dx = 0.0;
    double d2DP_dx2 = 0.0;
    double R = 0.0;

    double residual() const { return dP_dt + dCP_dx - d2DP_dx2 - R; }
    /// max(|P|, |dP/dt|, |d(CP)/dx|, |d2(DP)/dx2|, |R|, 1e-30).
    double scale() const;
};

/// Analytic mode assembles derivatives from the profile jets by the chain rule.
/// Finite-difference mode differentiates the physical fields with a
/// five-point stencil of step fd_step * max(1, |x|) (resp. |t|).
PdeTerms pde_terms(const cdr::CdrSystem& system, double x, double t, Mode mode, double fd_step = 1e-4);

ResidualReport pde_residual(const cdr::CdrSystem& system, const GridSpec& grid, Mode mode = Mode::Analytic,
                            double fd_step = 1e-4, sweep::Exec exec = sweep::Exec::Parallel);

/// Row-major (n_max+1)^2 Gram matrix of one chain member.
struct GramMatrix {
    int size = 0;
    std::vector<double> entries;

    double operator()(int m, int n) const { return entries[static_cast<std::size_t>(m * size + n)]; }
    /// max |G_mn - delta_mn|.
    double max_deviation_from_identity() const;
    double max_asymmetry() const;
};

/// G_mn = integral of u_m^(s) u_n^(s) over the half line, for m, n <= n_max <= 8.
GramMatrix orthonormality_matrix(const quantum::FamilyPtr& family, int s, int n_max,
                                 sweep::Exec exec = sweep::Exec::Parallel);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Sign changes of `f` on a uniform sample of [lo, hi], each refined by bisection.
std::vector<double> find_nodes(const std::function<double(double)>& f, Interval interval, int samples = 4096);

int node_count(const quantum::Eigenstate& state, Interval interval, int samples = 4096);

class EvolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvolveOptions {
    /// Point counts for the convergence study; empty means {grid.nx, 2 grid.nx}.
    std::vector<int> resolutions;
    /// Time steps per run as a multiple of the point count, so dt shrinks with h.
    double steps_per_point = 1.0;
    /// Shrink x_max to 0.9 times the first node of sigma (mapped to x at the
    /// binding time) so that D > 0 on the whole space-time slab.
    bool clip_to_positive_diffusion = true;
};

struct ConvergenceRow {
    int nx = 0;
    int steps = 0;
    double h = 0.0;
    double l2_error = 0.0;
};

struct EvolveResult {
    std::vector<double> x;
    std::vector<double> numeric;  ///< P at t1, first resolution
    std::vector<double> exact;
    double l2_error = 0.0;  ///< first resolution
    std::vector<ConvergenceRow> table;
    std::vector<double> error_ratios;    ///< e_k / e_{k+1}
    std::vector<double> observed_orders; ///< log(e_k/e_{k+1}) / log(h_k/h_{k+1})
    double x_max_used = 0.0;
    bool clipped = false;
};

/// Crank–Nicolson integration of the conservative CDR equation from the exact
/// P(., t0) to t1, with analytic Dirichlet data at both ends and R evaluated
/// in closed form at each half step. Throws EvolveError if the iterate
/// diverges or if diffusion is not positive on the domain.
EvolveResult evolve_oracle(const cdr::CdrSystem& system, const GridSpec& grid, double t0, double t1,
                           const EvolveOptions& options = {});

}  // namespace sscdr::verify
