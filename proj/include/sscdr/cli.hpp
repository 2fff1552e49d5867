#pragma once

/// @file cli.hpp
/// @brief Subcommands of the `sscdr` tool: build, eval, verify, emit-fig.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sscdr/cdr.hpp"
#include "sscdr/config.hpp"
#include "sscdr/csv.hpp"

namespace sscdr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CheckResult {
    std::string name;
    double value = 0.0;
    double lower = 0.0;  ///< pass iff lower <= value <= upper
    double upper = 0.0;
    bool passed = false;
    std::string detail;
    nlohmann::json report;  ///< ResidualReport as JSON, null for non-residual checks
};

/// Runs the residual, orthonormality, shape-invariance and time-stepping checks
/// for the configured system.
std::vector<CheckResult> run_verification(const RunConfig& config, const cdr::CdrSystem& system);

/// Human summary printed by `build`.
std::string describe(const cdr::CdrSystem& system);

struct FigureFiles {
    std::vector<std::filesystem::path> csv;
    std::filesystem::path script;
};

/// Figure dataset on x in [0.01, 10] (1000 points) at the snapshot times.
std::vector<io::FigurePanel> figure_panels(const cdr::CdrSystem& system);

/// Writes fig<k>_{P,D,C,R}.csv and fig<k>.gp into dir.
FigureFiles write_figure(int figure, const std::filesystem::path& dir);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sscdr::cli
