#include "sscdr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sscdr/catalog.hpp"
#include "sscdr/quantum.hpp"
#include "sscdr/verify.hpp"

namespace sscdr::cli {

namespace {

CheckResult upper_bound_check(std::string name, double value, double tol, std::string detail = {}) {
    return {std::move(name), value, 0.0, tol, std::isfinite(value) && value <= tol, std::move(detail), nullptr};
}

CheckResult residual_check(std::string name, const verify::ResidualReport& r, double value, double tol) {
    CheckResult c = upper_bound_check(std::move(name), value, tol);
    c.report = io::report_to_json(r);
    return c;
}

double shape_invariance_gap(const quantum::FamilyPtr& family, int s, const verify::GridSpec& grid) {
    const quantum::Eigenstate ground = quantum::eigenfunction(family, s, 0);
    const auto v_s = [&](double x) { return family->potential(s, x); };
    double worst = 0.0;
    for (double x : grid.xs()) {
        worst = std::max(worst, std::abs(quantum::darboux_partner(v_s, ground, x) - family->potential(s + 1, x)));
    }
    return worst;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return f;
}

std::string gnuplot_script(int figure, const std::vector<io::FigurePanel>& panels) {
    std::ostringstream gp;
    gp << "# Figure " << figure << " dataset: P, D, C, R versus x at t = 0.3 (dotted), 1.0 (dashed), 2.0 (solid).\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size 900,1000\n"
       << "set output 'fig" << figure << ".png'\n"
       << "set multiplot layout 2,2\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'x'\n";
    const char* dash[] = {"dt 3", "dt 2", "dt 1"};
    for (const io::FigurePanel& p : panels) {
        gp << "set ylabel '" << p.field << "(x,t)'\n"
           << "plot ";
        for (std::size_t k = 0; k < p.times.size(); ++k) {
            gp << (k ? ", " : "") << "'fig" << figure << '_' << p.field << ".csv' using 1:" << k + 2
               << " with lines " << dash[std::min<std::size_t>(k, 2)] << " lw 2";
        }
        gp << '\n';
    }
    gp << "unset multiplot\n";
    return gp.str();
}

}  // namespace

std::string describe(const cdr::CdrSystem& system) {
    const auto& ex = system.exponents();
    std::ostringstream os;
    os << std::setprecision(10);
    os << "case:      " << cdr::to_string(system.case_tag()) << '\n'
       << "family:    " << system.family().name() << '\n'
       << "y:         A=" << system.A() << " u_" << system.n() << "^(" << system.s() << ")  E=" << system.energy()
       << '\n'
       << "sigma:     B=" << system.B() << " u_" << system.n_prime() << "^(" << system.s_prime()
       << ")  E=" << system.sigma_state().energy() << '\n';
    if (system.case_tag() == cdr::CaseTag::CaseA) {
        os << "delta_E:   " << system.energy_gap() << '\n';
    }
    os << "exponents: alpha=" << ex.alpha << " mu=" << ex.mu << " gamma=" << ex.gamma << " delta=" << ex.delta
       << " rho=" << ex.rho_exp << '\n';
    return os.str();
}

std::vector<CheckResult> run_verification(const RunConfig& config, const cdr::CdrSystem& system) {
    std::vector<CheckResult> checks;
    const verify::GridSpec& grid = config.grid;
    const Tolerances& tol = config.tol;

    const auto sy = verify::schrodinger_residual(system.y_state(), grid);
    checks.push_back(residual_check("schrodinger[y] max_rel", sy, sy.max_rel, tol.residual));
    const auto ss = verify::schrodinger_residual(system.sigma_state(), grid);
    checks.push_back(residual_check("schrodinger[sigma] max_rel", ss, ss.max_rel, tol.residual));

    const std::vector<double> zs = grid.xs();
    const auto ode = verify::ode_residual(system, zs);
    checks.push_back(residual_check("ode max_abs", ode, ode.max_abs, tol.residual));

    const auto pde = verify::pde_residual(system, grid, verify::Mode::Analytic);
    checks.push_back(residual_check("pde[analytic] max_rel", pde, pde.max_rel, tol.residual));

    const quantum::FamilyPtr& family = system.y_state().family_ptr();
    std::vector<int> members{system.s()};
    if (system.s_prime() != system.s()) {
        members.push_back(system.s_prime());
    }
    for (int s : members) {
        const auto g = verify::orthonormality_matrix(family, s, config.orthonormality_n_max);
        checks.push_back(upper_bound_check("orthonormality[s=" + std::to_string(s) + "] max|G-I|",
                                           g.max_deviation_from_identity(), tol.orthonormality));
        checks.push_back(upper_bound_check("shape_invariance[s=" + std::to_string(s) + "] max_abs",
                                           shape_invariance_gap(family, s, grid), tol.shape_invariance));
    }

    if (config.evolve.enabled && config.evolve.t1 > config.evolve.t0) {
        verify::GridSpec eg = grid;
        eg.nx = config.evolve.nx;
        try {
            const auto ev = verify::evolve_oracle(system, eg, config.evolve.t0, config.evolve.t1);
            const double ratio = ev.error_ratios.front();
            std::ostringstream detail;
            detail << "x_max=" << ev.x_max_used << (ev.clipped ? " (clipped)" : "") << " e=" << ev.table[0].l2_error
                   << "," << ev.table[1].l2_error;
            checks.push_back({"evolve error ratio", ratio, tol.evolve_ratio_min, tol.evolve_ratio_max,
                              std::isfinite(ratio) && ratio >= tol.evolve_ratio_min && ratio <= tol.evolve_ratio_max,
                              detail.str(), nullptr});
        } catch (const verify::EvolveError& e) {
            checks.push_back({"evolve error ratio", std::nan(""), tol.evolve_ratio_min, tol.evolve_ratio_max, false,
                              e.what(), nullptr});
        }
    }
    return checks;
}

std::vector<io::FigurePanel> figure_panels(const cdr::CdrSystem& system) {
    const std::vector<double> xs = verify::linspace(0.01, 10.0, 1000);
    const std::vector<double> times(catalog::kFigureTimes.begin(), catalog::kFigureTimes.end());
    std::vector<io::FigurePanel> panels;
    for (const char* name : {"P", "D", "C", "R"}) {
        panels.push_back({name, xs, times, std::vector<std::vector<double>>(times.size(), std::vector<double>(xs.size()))});
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const cdr::FieldValues f = system.fields(xs[i], times[k]);
            panels[0].values[k][i] = f.P;
            panels[1].values[k][i] = f.D;
            panels[2].values[k][i] = f.C;
            panels[3].values[k][i] = f.R;
        }
    }
    return panels;
}

FigureFiles write_figure(int figure, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::vector<io::FigurePanel> panels = figure_panels(catalog::figure_system(figure));
    FigureFiles files;
    for (const io::FigurePanel& p : panels) {
        const auto path = dir / ("fig" + std::to_string(figure) + "_" + p.field + ".csv");
        std::ofstream f = open_output(path);
        io::write_panel_csv(f, p);
        files.csv.push_back(path);
    }
    files.script = dir / ("fig" + std::to_string(figure) + ".gp");
    std::ofstream f = open_output(files.script);
    f << gnuplot_script(figure, panels);
    return files;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exactly solvable convection-diffusion-reaction systems with intrinsic supersymmetry"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<double> tol_override;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
        if (needs_config) {
            opt->required();
        }
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--tol", tol_override, "Override residual and orthonormality tolerances")
            ->check(CLI::PositiveNumber);
    };
    CLI::App* build = app.add_subcommand("build", "Construct the configured system and print a summary");
    CLI::App* eval = app.add_subcommand("eval", "Sample P, D, C, R on the grid and write CSV");
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    CLI::App* emit = app.add_subcommand("emit-fig", "Write the figure 1 and figure 2 datasets");
    add_common(build, true);
    add_common(eval, true);
    add_common(verify_cmd, true);
    add_common(emit, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (emit->parsed()) {
            const std::filesystem::path dir = out_dir.empty() ? "figures" : out_dir;
            for (int figure : {1, 2}) {
                const FigureFiles files = write_figure(figure, dir);
                const cdr::CdrSystem sys = catalog::figure_system(figure);
                out << "figure " << figure << ": " << files.csv.size() << " csv files + "
                    << files.script.filename().string() << " in " << dir.string()
                    << " (P nodes: " << verify::node_count(sys.y_state(), {0.01, 10.0}) << ")\n";
            }
            return kExitOk;
        }

        RunConfig config = load_config(config_path);
        if (!out_dir.empty()) {
            config.out_dir = out_dir;
        }
        if (tol_override) {
            config.tol.residual = *tol_override;
            config.tol.orthonormality = *tol_override;
        }
        const cdr::CdrSystem system = build_system(config);

        if (build->parsed()) {
            out << describe(system);
            return kExitOk;
        }
        if (eval->parsed()) {
            std::filesystem::create_directories(config.out_dir);
            const auto path = config.out_dir / config.csv_name;
            const std::vector<io::FieldRow> rows = io::sample_fields(system, config.grid);
            std::ofstream f = open_output(path);
            io::write_fields_csv(f, rows);
            out << "wrote " << rows.size() << " rows to " << path.string() << '\n';
            return kExitOk;
        }

        const std::vector<CheckResult> checks = run_verification(config, system);
        bool ok = true;
        out << std::scientific << std::setprecision(3);
        for (const CheckResult& c : checks) {
            ok = ok && c.passed;
            out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(36) << c.name << " value=" << c.value
                << " bound=[" << c.lower << ", " << c.upper << "]";
            if (!c.detail.empty()) {
                out << "  " << c.detail;
            }
            out << '\n';
        }
        if (!out_dir.empty()) {
            nlohmann::json doc = nlohmann::json::array();
            for (const CheckResult& c : checks) {
                doc.push_back({{"check", c.name},
                               {"value", std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr)},
                               {"lower", c.lower},
                               {"upper", c.upper},
                               {"passed", c.passed},
                               {"detail", c.detail},
                               {"report", c.report}});
            }
            std::filesystem::create_directories(config.out_dir);
            std::ofstream f = open_output(config.out_dir / "verify_report.json");
            f << doc.dump(2) << '\n';
        }
        out << (ok ? "verification passed\n" : "verification FAILED\n");
        return ok ? kExitOk : kExitVerifyFailed;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const cdr::ConstraintError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace sscdr::cli
