#include "sscdr/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sscdr::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

double parse_double(const std::string& cell, std::size_t line_no) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
    }
    return v;
}

// Shortest "%g" form, for column labels only.
std::string format_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<FieldRow> sample_fields(const cdr::CdrSystem& system, const verify::GridSpec& grid, sweep::Exec exec) {
    grid.validate();
    const std::vector<double> xs = grid.xs();
    const std::vector<double> ts = grid.ts();
    std::vector<FieldRow> rows(xs.size() * ts.size());
    sweep::for_each(
        rows.size(),
        [&](std::size_t k) {
            const double x = xs[k % xs.size()];
            const double t = ts[k / xs.size()];
            rows[k] = {x, t, system.fields(x, t)};
        },
        exec);
    return rows;
}

void write_fields_csv(std::ostream& out, std::span<const FieldRow> rows) {
    out << kFieldsHeader << '\n';
    for (const FieldRow& r : rows) {
        out << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.fields.P) << ','
            << format_double(r.fields.D) << ',' << format_double(r.fields.C) << ',' << format_double(r.fields.R)
            << '\n';
    }
}

std::vector<FieldRow> read_fields_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kFieldsHeader) {
        throw std::runtime_error("csv: expected header '" + std::string(kFieldsHeader) + "'");
    }
    std::vector<FieldRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> c = split(line);
        if (c.size() != 6) {
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 6 columns");
        }
        rows.push_back({parse_double(c[0], line_no),
                        parse_double(c[1], line_no),
                        {parse_double(c[2], line_no), parse_double(c[3], line_no), parse_double(c[4], line_no),
                         parse_double(c[5], line_no)}});
    }
    return rows;
}

void write_panel_csv(std::ostream& out, const FigurePanel& panel) {
    out << 'x';
    for (double t : panel.times) {
        out << ',' << panel.field << "(t=" << format_label(t) << ')';
    }
    out << '\n';
    for (std::size_t i = 0; i < panel.x.size(); ++i) {
        out << format_double(panel.x[i]);
        for (const auto& column : panel.values) {
            out << ',' << format_double(column[i]);
        }
        out << '\n';
    }
}

FigurePanel read_panel_csv(std::istream& in, std::string field) {
    FigurePanel panel;
    panel.field = std::move(field);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("csv: empty figure panel");
    }
    const std::vector<std::string> header = split(line);
    if (header.empty() || header[0] != "x") {
        throw std::runtime_error("csv: figure panel must start with column x");
    }
    const std::string prefix = panel.field + "(t=";
    for (std::size_t k = 1; k < header.size(); ++k) {
        const std::string& h = header[k];
        if (h.rfind(prefix, 0) != 0 || h.back() != ')') {
            throw std::runtime_error("csv: unexpected panel column '" + h + "'");
        }
        panel.times.push_back(parse_double(h.substr(prefix.size(), h.size() - prefix.size() - 1), 1));
    }
    panel.values.resize(panel.times.size());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> c = split(line);
        if (c.size() != header.size()) {
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": column count mismatch");
        }
        panel.x.push_back(parse_double(c[0], line_no));
        for (std::size_t k = 1; k < c.size(); ++k) {
            panel.values[k - 1].push_back(parse_double(c[k], line_no));
        }
    }
    return panel;
}

nlohmann::json report_to_json(const verify::ResidualReport& report) {
    return {{"max_abs", report.max_abs},
            {"l2", report.l2},
            {"max_rel", report.max_rel},
            {"worst_point", {{"x", report.worst_point.x}, {"t", report.worst_point.t}}},
            {"mode", std::string(verify::to_string(report.mode))},
            {"samples", report.samples}};
}

std::string report_csv_row(std::string_view check, const verify::ResidualReport& report) {
    std::string row(check);
    row += ',';
    row += verify::to_string(report.mode);
    for (double v : {report.max_abs, report.l2, report.max_rel, report.worst_point.x, report.worst_point.t}) {
        row += ',';
        row += format_double(v);
    }
    row += ',';
    row += std::to_string(report.samples);
    return row;
}

}  // namespace sscdr::io
