#include "cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace hirota::cli {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
}

const json& required(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        throw ConfigError(std::string(where) + ": missing key '" + key + "'");
    return obj.at(key);
}

double real(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(where + ": expected a finite number");
    return d;
}

cplx complex_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw ConfigError(where + ": expected [re, im]");
    return {real(v[0], where), real(v[1], where)};
}

std::size_t count(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ConfigError(where + ": expected a positive integer point count");
    return static_cast<std::size_t>(v.get<long long>());
}

void axis(const json& v, const std::string& where, double& lo, double& hi, std::size_t& n) {
    if (!v.is_array() || v.size() != 3) throw ConfigError(where + ": expected [min, max, n]");
    lo = real(v[0], where);
    hi = real(v[1], where);
    n = count(v[2], where);
}

RunConfig from_json(const json& doc) {
    only_keys(doc, "config", {"medium", "solitons", "grid", "options"});

    const json& m = required(doc, "medium", "config");
    only_keys(m, "medium", {"rho", "sigma", "lambda"});
    RunConfig cfg{Medium(real(required(m, "rho", "medium"), "medium.rho"),
                         real(required(m, "sigma", "medium"), "medium.sigma"),
                         real(required(m, "lambda", "medium"), "medium.lambda")),
                  SolitonSet{},
                  std::nullopt,
                  Options{}};

    const json& sol = required(doc, "solitons", "config");
    if (!sol.is_array()) throw ConfigError("solitons: expected an array");
    std::vector<Soliton> solitons;
    for (std::size_t k = 0; k < sol.size(); ++k) {
        const std::string where = "solitons[" + std::to_string(k) + "]";
        only_keys(sol[k], where.c_str(), {"p", "a0"});
        solitons.push_back({complex_pair(required(sol[k], "p", where.c_str()), where + ".p"),
                            complex_pair(required(sol[k], "a0", where.c_str()), where + ".a0")});
    }
    cfg.solitons = SolitonSet(std::move(solitons));

    if (doc.contains("grid")) {
        const json& g = doc.at("grid");
        only_keys(g, "grid", {"x", "t"});
        GridSpec grid;
        axis(required(g, "x", "grid"), "grid.x", grid.x_min, grid.x_max, grid.nx);
        axis(required(g, "t", "grid"), "grid.t", grid.t_min, grid.t_max, grid.nt);
        grid.validate();
        cfg.grid = grid;
    }

    if (doc.contains("options")) {
        const json& o = doc.at("options");
        only_keys(o, "options", {"tolerance", "series_order", "seed"});
        if (o.contains("tolerance")) {
            cfg.options.tolerance = real(o.at("tolerance"), "options.tolerance");
            if (!(cfg.options.tolerance > 0.0))
                throw ConfigError("options.tolerance: must be positive");
        }
        if (o.contains("series_order")) {
            const json& v = o.at("series_order");
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw ConfigError("options.series_order: expected a non-negative integer");
            cfg.options.series_order = static_cast<int>(v.get<long long>());
        }
        if (o.contains("seed")) {
            const json& v = o.at("seed");
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw ConfigError("options.seed: expected a non-negative integer");
            cfg.options.seed = v.get<std::uint64_t>();
        }
    }
    return cfg;
}

}  // namespace

const GridSpec& RunConfig::require_grid() const {
    if (!grid) throw ConfigError("config: this command needs a \"grid\" section");
    return *grid;
}

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        return from_json(doc);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        // Medium / SolitonSet / GridSpec invariant violations.
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_config(const RunConfig& c) {
    auto pair = [](cplx z) { return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]"; };
    std::ostringstream os;
    os << "{\n";
    os << "  \"medium\": {\"rho\": " << format_real(c.medium.rho())
       << ", \"sigma\": " << format_real(c.medium.sigma())
       << ", \"lambda\": " << format_real(c.medium.lambda()) << "},\n";
    os << "  \"solitons\": [";
    for (std::size_t k = 0; k < c.solitons.size(); ++k) {
        os << (k == 0 ? "\n" : ",\n") << "    {\"p\": " << pair(c.solitons[k].p)
           << ", \"a0\": " << pair(c.solitons[k].a0) << "}";
    }
    os << (c.solitons.empty() ? "],\n" : "\n  ],\n");
    if (c.grid) {
        const auto& g = *c.grid;
        os << "  \"grid\": {\"x\": [" << format_real(g.x_min) << ", " << format_real(g.x_max)
           << ", " << g.nx << "], \"t\": [" << format_real(g.t_min) << ", "
           << format_real(g.t_max) << ", " << g.nt << "]},\n";
    }
    os << "  \"options\": {\"tolerance\": " << format_real(c.options.tolerance)
       << ", \"series_order\": " << c.options.series_order << ", \"seed\": " << c.options.seed
       << "}\n";
    os << "}\n";
    return os.str();
}

}  // namespace hirota::cli
