#pragma once

/// @file csv.hpp
/// @brief CSV/JSON serialization of field samples and residual reports.
///
/// Numbers are written with 17 significant digits ("%.17g"), which
/// round-trips every finite double exactly.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sscdr/cdr.hpp"
#include "sscdr/sweep.hpp"
#include "sscdr/verify.hpp"

namespace sscdr::io {

std::string format_double(double v);

struct FieldRow {
    double x = 0.0;
    double t = 0.0;
    cdr::FieldValues fields;
};

/// Rows ordered t-major: all x for the first t, then the next t.
std::vector<FieldRow> sample_fields(const cdr::CdrSystem& system, const verify::GridSpec& grid,
                                    sweep::Exec exec = sweep::Exec::Parallel);

inline constexpr std::string_view kFieldsHeader = "x,t,P,D,C,R";

void write_fields_csv(std::ostream& out, std::span<const FieldRow> rows);
/// Parses what write_fields_csv produced; throws std::runtime_error on a malformed file.
std::vector<FieldRow> read_fields_csv(std::istream& in);

/// One figure panel: the column `x` followed by one column per snapshot time.
struct FigurePanel {
    std::string field;  ///< "P", "D", "C" or "R"
    std::vector<double> x;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  ///< values[k][i] at times[k], x[i]
};

void write_panel_csv(std::ostream& out, const FigurePanel& panel);
FigurePanel read_panel_csv(std::istream& in, std::string field);

nlohmann::json report_to_json(const verify::ResidualReport& report);

inline constexpr std::string_view kReportHeader = "check,mode,max_abs,l2,max_rel,worst_x,worst_t,samples";
std::string report_csv_row(std::string_view check, const verify::ResidualReport& report);

}  // namespace sscdr::io
