#include "e2surf/config.hpp"

#include <fstream>

#include "e2surf/errors.hpp"

namespace e2surf {

namespace {

double require_positive(const nlohmann::json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError("config field '" + key + "' must be a number");
    const double v = j[key].get<double>();
    if (!(v > 0.0)) throw ConfigError("config field '" + key + "' must be positive");
    return v;
}

double number_or(const nlohmann::json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError("config field '" + key + "' must be a number");
    return j[key].get<double>();
}

int count_or(const nlohmann::json& j, const std::string& key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) {
        throw ConfigError("config field '" + key + "' must be an integer");
    }
    return j[key].get<int>();
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig cfg;

    cfg.lambda1 = require_positive(j, "lambda1", 1.0);
    cfg.lambda2 = require_positive(j, "lambda2", 1.0);
    if (cfg.lambda1 < cfg.lambda2) {
        throw ConfigError("lambda1 (" + std::to_string(cfg.lambda1) +
                          ") must be >= lambda2 (" + std::to_string(cfg.lambda2) + ")");
    }

    if (!j.contains("family")) throw ConfigError("config field 'family' is required");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "helicoid") {
        cfg.family = Family::helicoid;
    } else if (fam == "catenoid") {
        cfg.family = Family::catenoid;
    } else {
        throw ConfigError("config field 'family' must be 'helicoid' or 'catenoid', got '" + fam + "'");
    }

    cfg.K = number_or(j, "K", cfg.K);
    cfg.c = number_or(j, "c", cfg.c);
    if (j.contains("theta")) cfg.theta = j["theta"].get<double>();

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.grid.u_min = number_or(g, "u_min", cfg.grid.u_min);
        cfg.grid.u_max = number_or(g, "u_max", cfg.grid.u_max);
        cfg.grid.v_min = number_or(g, "v_min", cfg.grid.v_min);
        cfg.grid.v_max = number_or(g, "v_max", cfg.grid.v_max);
        cfg.grid.nu = count_or(g, "nu", cfg.grid.nu);
        cfg.grid.nv = count_or(g, "nv", cfg.grid.nv);
    }
    if (cfg.grid.nu < 2 || cfg.grid.nv < 2) {
        throw ConfigError("grid counts nu, nv must be at least 2");
    }
    if (!(cfg.grid.u_min < cfg.grid.u_max) || !(cfg.grid.v_min < cfg.grid.v_max)) {
        throw ConfigError("grid ranges must satisfy u_min < u_max and v_min < v_max");
    }

    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        cfg.tol.ode = require_positive(t, "ode", cfg.tol.ode);
        cfg.tol.quad = require_positive(t, "quad", cfg.tol.quad);
        cfg.tol.root = require_positive(t, "root", cfg.tol.root);
    }

    cfg.section_level = number_or(j, "section_level", cfg.section_level);
    cfg.threads = count_or(j, "threads", cfg.threads);
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");

    if (j.contains("outputs")) {
        const auto& o = j["outputs"];
        if (o.contains("mesh")) cfg.mesh_path = o["mesh"].get<std::string>();
        if (o.contains("csv")) cfg.csv_path = o["csv"].get<std::string>();
        if (o.contains("report")) cfg.report_path = o["report"].get<std::string>();
    }
    return cfg;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file '" + path + "' must hold a JSON object");
    return j;
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["lambda1"] = cfg.lambda1;
    j["lambda2"] = cfg.lambda2;
    j["family"] = family_name(cfg.family);
    j["K"] = cfg.K;
    j["c"] = cfg.c;
    if (cfg.theta) j["theta"] = *cfg.theta;
    j["grid"] = {{"u_min", cfg.grid.u_min}, {"u_max", cfg.grid.u_max},
                 {"v_min", cfg.grid.v_min}, {"v_max", cfg.grid.v_max},
                 {"nu", cfg.grid.nu},       {"nv", cfg.grid.nv}};
    j["tolerances"] = {{"ode", cfg.tol.ode}, {"quad", cfg.tol.quad}, {"root", cfg.tol.root}};
    j["section_level"] = cfg.section_level;
    j["threads"] = cfg.threads;
    j["outputs"] = {{"mesh", cfg.mesh_path}, {"csv", cfg.csv_path}, {"report", cfg.report_path}};
    return j;
}

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string dump = to_json(cfg).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string family_name(Family f) {
    return f == Family::helicoid ? "helicoid" : "catenoid";
}

}  // namespace e2surf
