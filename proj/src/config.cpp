#include "sscdr/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "sscdr/quantum.hpp"

namespace sscdr::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config field '" + path + "': " + what);
}

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (std::string_view a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            fail(join(prefix, key), "unknown key");
        }
    }
}

const json* section(const json& doc, const std::string& key) {
    if (!doc.contains(key)) {
        return nullptr;
    }
    const json& v = doc.at(key);
    if (!v.is_object()) {
        fail(key, "expected an object");
    }
    return &v;
}

void read_number(const json& obj, const std::string& prefix, const std::string& key, double& out) {
    if (!obj.contains(key)) {
        return;
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        fail(join(prefix, key), "expected a number");
    }
    out = v.get<double>();
}

void read_int(const json& obj, const std::string& prefix, const std::string& key, int& out) {
    if (!obj.contains(key)) {
        return;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        fail(join(prefix, key), "expected an integer");
    }
    out = v.get<int>();
}

void read_index(const json& obj, const std::string& prefix, const std::string& key, int& out) {
    read_int(obj, prefix, key, out);
    if (out < 0) {
        fail(join(prefix, key), "expected a nonnegative integer");
    }
}

void read_bool(const json& obj, const std::string& prefix, const std::string& key, bool& out) {
    if (!obj.contains(key)) {
        return;
    }
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
        fail(join(prefix, key), "expected true or false");
    }
    out = v.get<bool>();
}

void read_string(const json& obj, const std::string& prefix, const std::string& key, std::string& out) {
    if (!obj.contains(key)) {
        return;
    }
    const json& v = obj.at(key);
    if (!v.is_string()) {
        fail(join(prefix, key), "expected a string");
    }
    out = v.get<std::string>();
}

}  // namespace

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    reject_unknown(doc, "",
                   {"family", "case", "alpha", "indices", "constants", "grid", "tolerances", "evolve", "orthonormality",
                    "output"});
    RunConfig cfg;

    if (!doc.contains("case")) {
        fail("case", "required (one of fpe, case_a, case_b)");
    }
    std::string kind;
    read_string(doc, "", "case", kind);
    if (kind == "fpe") {
        cfg.kind = cdr::CaseTag::Fpe;
    } else if (kind == "case_a") {
        cfg.kind = cdr::CaseTag::CaseA;
    } else if (kind == "case_b") {
        cfg.kind = cdr::CaseTag::CaseB;
    } else {
        fail("case", "expected one of fpe, case_a, case_b (got '" + kind + "')");
    }

    read_number(doc, "", "alpha", cfg.alpha);

    if (const json* fam = section(doc, "family")) {
        reject_unknown(*fam, "family", {"omega", "ell"});
        read_number(*fam, "family", "omega", cfg.omega);
        read_number(*fam, "family", "ell", cfg.ell);
    }
    if (!(cfg.omega > 0.0)) {
        fail("family.omega", "must be positive");
    }
    if (!(cfg.ell > 0.0)) {
        fail("family.ell", "must be positive");
    }

    if (const json* idx = section(doc, "indices")) {
        switch (cfg.kind) {
            case cdr::CaseTag::Fpe:
                reject_unknown(*idx, "indices", {"n", "s"});
                break;
            case cdr::CaseTag::CaseA:
                reject_unknown(*idx, "indices", {"n", "m", "s"});
                break;
            case cdr::CaseTag::CaseB:
                reject_unknown(*idx, "indices", {"n", "s", "n_prime", "s_prime"});
                break;
        }
        read_index(*idx, "indices", "n", cfg.n);
        read_index(*idx, "indices", "s", cfg.s);
        read_index(*idx, "indices", "m", cfg.m);
        read_index(*idx, "indices", "n_prime", cfg.n_prime);
        read_index(*idx, "indices", "s_prime", cfg.s_prime);
    }
    if (cfg.kind == cdr::CaseTag::CaseB && cfg.n + cfg.s != cfg.n_prime + cfg.s_prime) {
        fail("indices", "case_b requires n + s == n_prime + s_prime (got " + std::to_string(cfg.n + cfg.s) +
                            " vs " + std::to_string(cfg.n_prime + cfg.s_prime) + ")");
    }

    if (const json* c = section(doc, "constants")) {
        if (cfg.kind != cdr::CaseTag::CaseB) {
            fail("constants", "A and B apply to case_b only");
        }
        reject_unknown(*c, "constants", {"A", "B"});
        read_number(*c, "constants", "A", cfg.A);
        read_number(*c, "constants", "B", cfg.B);
        if (cfg.A == 0.0) {
            fail("constants.A", "must be nonzero");
        }
        if (cfg.B == 0.0) {
            fail("constants.B", "must be nonzero");
        }
    }

    if (const json* g = section(doc, "grid")) {
        reject_unknown(*g, "grid", {"x_min", "x_max", "nx", "t_min", "t_max", "nt"});
        read_number(*g, "grid", "x_min", cfg.grid.x_min);
        read_number(*g, "grid", "x_max", cfg.grid.x_max);
        read_int(*g, "grid", "nx", cfg.grid.nx);
        read_number(*g, "grid", "t_min", cfg.grid.t_min);
        read_number(*g, "grid", "t_max", cfg.grid.t_max);
        read_int(*g, "grid", "nt", cfg.grid.nt);
    }
    try {
        cfg.grid.validate();
    } catch (const std::invalid_argument& e) {
        fail("grid", e.what());
    }

    if (const json* t = section(doc, "tolerances")) {
        reject_unknown(*t, "tolerances",
                       {"residual", "orthonormality", "shape_invariance", "evolve_ratio_min", "evolve_ratio_max"});
        read_number(*t, "tolerances", "residual", cfg.tol.residual);
        read_number(*t, "tolerances", "orthonormality", cfg.tol.orthonormality);
        read_number(*t, "tolerances", "shape_invariance", cfg.tol.shape_invariance);
        read_number(*t, "tolerances", "evolve_ratio_min", cfg.tol.evolve_ratio_min);
        read_number(*t, "tolerances", "evolve_ratio_max", cfg.tol.evolve_ratio_max);
        for (const auto& [key, value] : t->items()) {
            if (!(value.get<double>() > 0.0)) {
                fail(join("tolerances", key), "must be positive");
            }
        }
    }

    if (const json* e = section(doc, "evolve")) {
        reject_unknown(*e, "evolve", {"enabled", "t0", "t1", "nx"});
        read_bool(*e, "evolve", "enabled", cfg.evolve.enabled);
        read_number(*e, "evolve", "t0", cfg.evolve.t0);
        read_number(*e, "evolve", "t1", cfg.evolve.t1);
        read_int(*e, "evolve", "nx", cfg.evolve.nx);
    }
    if (!(cfg.evolve.t0 > 0.0) || !(cfg.evolve.t1 >= cfg.evolve.t0)) {
        fail("evolve", "require 0 < t0 <= t1");
    }
    if (cfg.evolve.nx < 8) {
        fail("evolve.nx", "must be at least 8");
    }

    if (const json* o = section(doc, "orthonormality")) {
        reject_unknown(*o, "orthonormality", {"n_max"});
        read_int(*o, "orthonormality", "n_max", cfg.orthonormality_n_max);
        if (cfg.orthonormality_n_max < 0 || cfg.orthonormality_n_max > 8) {
            fail("orthonormality.n_max", "must lie in [0, 8]");
        }
    }

    if (const json* o = section(doc, "output")) {
        reject_unknown(*o, "output", {"dir", "csv"});
        std::string dir = cfg.out_dir.string();
        read_string(*o, "output", "dir", dir);
        cfg.out_dir = dir;
        read_string(*o, "output", "csv", cfg.csv_name);
    }
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

cdr::CdrSystem build_system(const RunConfig& config) {
    const quantum::FamilyPtr family = quantum::make_radial_oscillator(config.omega, config.ell);
    switch (config.kind) {
        case cdr::CaseTag::Fpe:
            return cdr::build_fpe(family, config.s, config.n, config.alpha);
        case cdr::CaseTag::CaseA:
            return cdr::build_case_a(family, config.alpha, config.n, config.m, config.s);
        case cdr::CaseTag::CaseB:
            return cdr::build_case_b(family, config.alpha, config.n, config.s, config.n_prime, config.s_prime,
                                     config.A, config.B);
    }
    throw ConfigError("config: unknown case");
}

}  // namespace sscdr::cli
