#include "sscdr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sscdr/mathfn.hpp"

namespace sscdr::verify {

namespace {

constexpr double kScaleFloor = 1e-30;

ResidualReport to_report(const sweep::Reduction& red, Mode mode, GridPoint worst) {
    ResidualReport r;
    r.max_abs = red.max_abs;
    r.l2 = red.count > 0 ? std::sqrt(red.sum_sq / static_cast<double>(red.count)) : 0.0;
    r.max_rel = red.max_rel;
    r.worst_point = worst;
    r.mode = mode;
    r.samples = red.count;
    return r;
}

double max_abs_of(std::initializer_list<double> values) {
    double m = kScaleFloor;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// Solves a tridiagonal system in place; sub[0] and sup[n-1] are ignored.
void thomas_solve(std::vector<double>& sub, std::vector<double>& diag, std::vector<double>& sup,
                  std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
    }
}

struct Operator {
    std::vector<double> lower;  // multiplies P_{i-1}
    std::vector<double> diag;
    std::vector<double> upper;  // multiplies P_{i+1}
};

// Central discretization of -d(CP)/dx + d2(DP)/dx2 on interior rows.
Operator assemble(const cdr::CdrSystem& system, std::span<const double> x, double h, double t) {
    const std::size_t n = x.size();
    std::vector<double> c(n);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cdr::FieldValues f = system.fields(x[i], t);
        c[i] = f.C;
        d[i] = f.D;
    }
    Operator op{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    const double inv_h2 = 1.0 / (h * h);
    const double inv_2h = 0.5 / h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        op.lower[i] = c[i - 1] * inv_2h + d[i - 1] * inv_h2;
        op.diag[i] = -2.0 * d[i] * inv_h2;
        op.upper[i] = -c[i + 1] * inv_2h + d[i + 1] * inv_h2;
    }
    return op;
}

struct RunOutcome {
    std::vector<double> x;
    std::vector<double> numeric;
    std::vector<double> exact;
    double h = 0.0;
    int steps = 0;
    double l2_error = 0.0;
};

RunOutcome run_crank_nicolson(const cdr::CdrSystem& system, double x_lo, double x_hi, int nx, int steps, double t0,
                              double t1) {
    RunOutcome out;
    out.x = linspace(x_lo, x_hi, nx);
    out.h = (x_hi - x_lo) / (nx - 1);
    out.steps = steps;
    const auto n = static_cast<std::size_t>(nx);

    auto exact_at = [&](double t) {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = system.fields(out.x[i], t).P;
        }
        return p;
    };

    std::vector<double> p = exact_at(t0);
    double peak = 0.0;
    for (double v : p) {
        peak = std::max(peak, std::abs(v));
    }

    const double dt = steps > 0 ? (t1 - t0) / steps : 0.0;
    Operator now = assemble(system, out.x, out.h, t0);
    std::vector<double> sub(n), diag(n), sup(n), rhs(n);
    for (int k = 0; k < steps; ++k) {
        const double t = t0 + k * dt;
        const double t_next = (k + 1 == steps) ? t1 : t + dt;
        const double t_half = 0.5 * (t + t_next);
        const double step = t_next - t;
        Operator next = assemble(system, out.x, out.h, t_next);

        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double ap = now.lower[i] * p[i - 1] + now.diag[i] * p[i] + now.upper[i] * p[i + 1];
            rhs[i] = p[i] + 0.5 * step * ap + step * system.fields(out.x[i], t_half).R;
            sub[i] = -0.5 * step * next.lower[i];
            diag[i] = 1.0 - 0.5 * step * next.diag[i];
            sup[i] = -0.5 * step * next.upper[i];
        }
        sub[0] = sup[0] = 0.0;
        diag[0] = 1.0;
        rhs[0] = system.fields(out.x[0], t_next).P;
        sub[n - 1] = sup[n - 1] = 0.0;
        diag[n - 1] = 1.0;
        rhs[n - 1] = system.fields(out.x[n - 1], t_next).P;

        thomas_solve(sub, diag, sup, rhs);
        p.swap(rhs);
        for (double v : p) {
            if (!std::isfinite(v) || std::abs(v) > 1e6 * std::max(peak, 1e-300)) {
                throw EvolveError("evolve_oracle: iteration diverged at t = " + std::to_string(t_next));
            }
        }
        now = std::move(next);
    }

    out.numeric = std::move(p);
    out.exact = exact_at(t1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = out.numeric[i] - out.exact[i];
        sum += e * e;
    }
    out.l2_error = std::sqrt(out.h * sum);
    return out;
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::Analytic ? "analytic" : "finite-difference"; }

void GridSpec::validate() const {
    if (!(x_min > 0.0) || !(x_max > x_min)) {
        throw std::invalid_argument("GridSpec: require 0 < x_min < x_max");
    }
    if (nx < 8) {
        throw std::invalid_argument("GridSpec: nx must be at least 8");
    }
    if (!(t_min > 0.0) || !(t_max >= t_min)) {
        throw std::invalid_argument("GridSpec: require 0 < t_min <= t_max");
    }
    if (nt < 2 && t_max > t_min) {
        throw std::invalid_argument("GridSpec: nt must be at least 2");
    }
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) {
        return {};
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = lo + step * i;
    }
    v.back() = hi;
    return v;
}

std::vector<double> GridSpec::xs() const { return linspace(x_min, x_max, nx); }

std::vector<double> GridSpec::ts() const { return t_max > t_min ? linspace(t_min, t_max, nt) : std::vector{t_min}; }

ResidualReport schrodinger_residual(const quantum::Eigenstate& state, const GridSpec& grid,
                                    std::optional<double> energy, sweep::Exec exec) {
    grid.validate();
    const std::vector<double> xs = grid.xs();
    const double e = energy.value_or(state.energy());
    const sweep::Reduction red = sweep::reduce(
        xs.size(),
        [&](std::size_t i) {
            const double x = xs[i];
            const quantum::Jet u = state.jet(x);
            return sweep::PointSample{-u.d2 + (state.potential(x) - e) * u.value, std::abs(u.value)};
        },
        exec);

    ResidualReport r = to_report(red, Mode::Analytic, {xs[red.worst_abs], 0.0});
    r.max_rel = red.max_abs / std::max(red.max_scale, kScaleFloor);
    return r;
}

ResidualReport ode_residual(const ProfileFn& profiles, double alpha, double mu, std::span<const double> z_grid,
                            sweep::Exec exec) {
    if (z_grid.empty()) {
        throw std::invalid_argument("ode_residual: empty z grid");
    }
    const sweep::Reduction red = sweep::reduce(
        z_grid.size(),
        [&](std::size_t i) {
            const double z = z_grid[i];
            const cdr::ProfileSample p = profiles(z);
            const double t1 = p.sigma.value * p.y.d2;
            const double t2 = (2.0 * p.sigma.d1 + alpha * z - p.tau) * p.y.d1;
            const double t3 = (p.tau_deriv + mu - p.sigma.d2) * p.y.value;
            return sweep::PointSample{t1 + t2 - t3 + p.reaction, max_abs_of({t1, t2, t3, p.reaction})};
        },
        exec);
    return to_report(red, Mode::Analytic, {z_grid[red.worst_abs], 0.0});
}

ResidualReport ode_residual(const cdr::CdrSystem& system, std::span<const double> z_grid, sweep::Exec exec) {
    return ode_residual([&system](double z) { return system.profiles(z); }, system.alpha(),
                        system.exponents().mu, z_grid, exec);
}

double PdeTerms::scale() const { return max_abs_of({P, dP_dt, dCP_dx, d2DP_dx2, R}); }

PdeTerms pde_terms(const cdr::CdrSystem& system, double x, double t, Mode mode, double fd_step) {
    if (!(t > 0.0)) {
        throw std::domain_error("pde_terms: t must be positive");
    }
    const similarity::ScalingExponents& ex = system.exponents();
    PdeTerms terms;

    if (mode == Mode::Analytic) {
        const double z = similarity::to_similarity(x, t, ex.alpha);
        const cdr::ProfileSample p = system.profiles(z);
        const double tp = std::pow(t, ex.mu);
        terms.P = tp * p.y.value;
        terms.dP_dt = tp / t * (ex.mu * p.y.value - ex.alpha * z * p.y.d1);
        terms.dCP_dx = std::pow(t, ex.gamma + ex.mu - ex.alpha) * (p.tau_deriv * p.y.value + p.tau * p.y.d1);
        terms.d2DP_dx2 = std::pow(t, ex.delta + ex.mu - 2.0 * ex.alpha) *
                         (p.sigma.d2 * p.y.value + 2.0 * p.sigma.d1 * p.y.d1 + p.sigma.value * p.y.d2);
        terms.R = std::pow(t, system.reaction_exponent()) * p.reaction;
        return terms;
    }

    const double hx = fd_step * std::max(1.0, std::abs(x));
    const double ht = fd_step * std::max(1.0, std::abs(t));
    if (!(t - 2.0 * ht > 0.0)) {
        throw std::domain_error("pde_terms: finite-difference stencil reaches t <= 0");
    }
    const cdr::FieldValues f = system.fields(x, t);
    terms.P = f.P;
    terms.R = f.R;
    terms.dP_dt = mathfn::fd_derivative([&](double tt) { return system.fields(x, tt).P; }, t, 1, ht);
    terms.dCP_dx = mathfn::fd_derivative(
        [&](double xx) {
            const cdr::FieldValues g = system.fields(xx, t);
            return g.C * g.P;
        },
        x, 1, hx);
    terms.d2DP_dx2 = mathfn::fd_derivative(
        [&](double xx) {
            const cdr::FieldValues g = system.fields(xx, t);
            return g.D * g.P;
        },
        x, 2, hx);
    return terms;
}

ResidualReport pde_residual(const cdr::CdrSystem& system, const GridSpec& grid, Mode mode, double fd_step,
                            sweep::Exec exec) {
    grid.validate();
    const std::vector<double> xs = grid.xs();
    const std::vector<double> ts = grid.ts();
    const std::size_t nx = xs.size();
    const sweep::Reduction red = sweep::reduce(
        nx * ts.size(),
        [&](std::size_t k) {
            const PdeTerms terms = pde_terms(system, xs[k % nx], ts[k / nx], mode, fd_step);
            return sweep::PointSample{terms.residual(), terms.scale()};
        },
        exec);
    return to_report(red, mode, {xs[red.worst_rel % nx], ts[red.worst_rel / nx]});
}

double GramMatrix::max_deviation_from_identity() const {
    double dev = 0.0;
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            dev = std::max(dev, std::abs((*this)(m, n) - (m == n ? 1.0 : 0.0)));
        }
    }
    return dev;
}

double GramMatrix::max_asymmetry() const {
    double dev = 0.0;
    for (int m = 0; m < size; ++m) {
        for (int n = m + 1; n < size; ++n) {
            dev = std::max(dev, std::abs((*this)(m, n) - (*this)(n, m)));
        }
    }
    return dev;
}

GramMatrix orthonormality_matrix(const quantum::FamilyPtr& family, int s, int n_max, sweep::Exec exec) {
    if (n_max < 0 || n_max > 8) {
        throw std::invalid_argument("orthonormality_matrix: n_max must lie in [0, 8]");
    }
    std::vector<quantum::Eigenstate> states;
    for (int n = 0; n <= n_max; ++n) {
        states.push_back(quantum::eigenfunction(family, s, n));
    }

    // Widen the Gaussian default until every |u_n(x_max)|^2 is below abs_tol,
    // since the polynomial factor of high (ell + s, n) states pushes the tail out.
    mathfn::QuadratureSpec spec = mathfn::QuadratureSpec::for_gaussian_weight(family->decay_rate());
    auto tail = [&](double x) {
        double m = 0.0;
        for (const auto& u : states) {
            m = std::max(m, u(x) * u(x));
        }
        return m;
    };
    double x_max = spec.truncation_x_max();
    while (!(tail(x_max) < 1e-3 * spec.abs_tol())) {
        x_max *= 1.25;
    }
    spec = spec.with_truncation(x_max);

    GramMatrix g;
    g.size = n_max + 1;
    g.entries.assign(static_cast<std::size_t>(g.size * g.size), 0.0);
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m <= n_max; ++m) {
        for (int n = m; n <= n_max; ++n) {
            pairs.emplace_back(m, n);
        }
    }
    // Below x_min the integrand is O(x^{2 ell + 2}); that sliver is dropped.
    const double lower = family->x_min();
    sweep::for_each(
        pairs.size(),
        [&](std::size_t k) {
            const auto [m, n] = pairs[k];
            const quantum::Eigenstate& a = states[static_cast<std::size_t>(m)];
            const quantum::Eigenstate& b = states[static_cast<std::size_t>(n)];
            const double v = mathfn::integrate([&](double x) { return a(x) * b(x); }, lower, spec);
            g.entries[static_cast<std::size_t>(m * g.size + n)] = v;
            g.entries[static_cast<std::size_t>(n * g.size + m)] = v;
        },
        exec);
    return g;
}

std::vector<double> find_nodes(const std::function<double(double)>& f, Interval interval, int samples) {
    if (!(interval.hi > interval.lo) || samples < 2) {
        throw std::invalid_argument("find_nodes: need lo < hi and at least two samples");
    }
    const std::vector<double> xs = linspace(interval.lo, interval.hi, samples);
    std::vector<double> roots;
    double x_prev = xs[0];
    double f_prev = f(x_prev);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x = xs[i];
        const double fx = f(x);
        if (fx == 0.0) {
            continue;  // a sign change across an exact zero is caught at the next sample
        }
        if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
            double a = x_prev;
            double b = x;
            double fa = f_prev;
            for (int it = 0; it < 60 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

int node_count(const quantum::Eigenstate& state, Interval interval, int samples) {
    return static_cast<int>(find_nodes([&](double x) { return state(x); }, interval, samples).size());
}

EvolveResult evolve_oracle(const cdr::CdrSystem& system, const GridSpec& grid, double t0, double t1,
                           const EvolveOptions& options) {
    grid.validate();
    if (!(t0 > 0.0) || !(t1 >= t0)) {
        throw std::invalid_argument("evolve_oracle: require 0 < t0 <= t1");
    }
    const double alpha = system.alpha();
    const double lo_factor = std::min(std::pow(t0, alpha), std::pow(t1, alpha));
    const double hi_factor = std::max(std::pow(t0, alpha), std::pow(t1, alpha));

    EvolveResult result;
    result.x_max_used = grid.x_max;
    const quantum::Eigenstate& sigma = system.sigma_state();
    const double z_lo = std::max(grid.x_min / hi_factor, system.family().x_min());
    const double z_hi = grid.x_max / lo_factor;
    if (!(sigma(z_lo) > 0.0)) {
        throw EvolveError("evolve_oracle: diffusion is not positive at the left boundary; the problem is ill-posed");
    }
    if (options.clip_to_positive_diffusion && z_hi > z_lo) {
        const std::vector<double> nodes = find_nodes([&](double z) { return sigma(z); }, {z_lo, z_hi});
        if (!nodes.empty()) {
            result.x_max_used = std::min(grid.x_max, 0.9 * nodes.front() * lo_factor);
            result.clipped = true;
            if (!(result.x_max_used > grid.x_min)) {
                throw EvolveError("evolve_oracle: no positive-diffusion region to the right of x_min");
            }
        }
    }

    std::vector<int> resolutions = options.resolutions;
    if (resolutions.empty()) {
        resolutions = {grid.nx, 2 * grid.nx};
    }
    for (std::size_t k = 0; k < resolutions.size(); ++k) {
        const int nx = resolutions[k];
        if (nx < 8) {
            throw std::invalid_argument("evolve_oracle: resolutions must be at least 8 points");
        }
        const int steps = t1 > t0 ? std::max(1, static_cast<int>(std::lround(options.steps_per_point * nx))) : 0;
        RunOutcome run = run_crank_nicolson(system, grid.x_min, result.x_max_used, nx, steps, t0, t1);
        result.table.push_back({nx, steps, run.h, run.l2_error});
        if (k == 0) {
            result.x = std::move(run.x);
            result.numeric = std::move(run.numeric);
            result.exact = std::move(run.exact);
            result.l2_error = run.l2_error;
        }
    }
    for (std::size_t k = 0; k + 1 < result.table.size(); ++k) {
        const ConvergenceRow& a = result.table[k];
        const ConvergenceRow& b = result.table[k + 1];
        const double ratio = b.l2_error > 0.0 ? a.l2_error / b.l2_error : std::numeric_limits<double>::quiet_NaN();
        result.error_ratios.push_back(ratio);
        result.observed_orders.push_back(std::log(ratio) / std::log(a.h / b.h));
    }
    return result;
}

}  // namespace sscdr::verify
