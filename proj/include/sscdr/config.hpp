#pragma once

/// @file config.hpp
/// @brief JSON run configuration for the command-line front-end.
///
/// Example:
///
///   {
///     "family":    {"omega": 1.0, "ell": 1.0},
///     "case":      "case_b",
///     "alpha":     1.0,
///     "indices":   {"n": 3, "s": 1, "n_prime": 1, "s_prime": 3},
///     "constants": {"A": 1.0, "B": 3.0},
///     "grid":      {"x_min": 0.2, "x_max": 8.0, "nx": 400, "t_min": 0.5, "t_max": 2.5, "nt": 200},
///     "tolerances": {"residual": 1e-8},
///     "evolve":    {"t0": 1.0, "t1": 2.0, "nx": 200},
///     "output":    {"dir": "out", "csv": "fields.csv"}
///   }
///
/// Only "case" is required. Index keys per case: fpe {n, s}; case_a {n, m, s};
/// case_b {n, s, n_prime, s_prime}. Unknown keys are rejected.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sscdr/cdr.hpp"
#include "sscdr/verify.hpp"

namespace sscdr::cli {

/// Bad config file; the message names the offending field (or line/column
/// for malformed JSON).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double residual = 1e-8;          ///< schrodinger / ode / pde max_rel (ode: max_abs)
    double orthonormality = 1e-8;    ///< max |G - I|
    double shape_invariance = 1e-6;  ///< max |darboux partner - next chain member|
    double evolve_ratio_min = 3.5;
    double evolve_ratio_max = 4.5;
};

struct EvolveConfig {
    bool enabled = true;
    double t0 = 1.0;
    double t1 = 2.0;
    int nx = 200;
};

struct RunConfig {
    double omega = 1.0;
    double ell = 1.0;
    cdr::CaseTag kind = cdr::CaseTag::Fpe;
    double alpha = 1.0;
    int n = 0;
    int s = 0;
    int m = 0;        ///< case_a sigma level
    int n_prime = 0;  ///< case_b sigma level
    int s_prime = 0;  ///< case_b sigma chain member
    double A = 1.0;
    double B = 1.0;
    verify::GridSpec grid;
    Tolerances tol;
    EvolveConfig evolve;
    int orthonormality_n_max = 6;
    std::filesystem::path out_dir = ".";
    std::string csv_name = "fields.csv";
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

cdr::CdrSystem build_system(const RunConfig& config);

}  // namespace sscdr::cli
