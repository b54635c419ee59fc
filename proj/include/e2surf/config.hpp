#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace e2surf {

enum class Family { helicoid, catenoid };

struct GridSpec {
    double u_min = -2.0, u_max = 2.0;
    double v_min = -2.0, v_max = 2.0;
    int nu = 50, nv = 50;
};

struct Tolerances {
    double ode = 1e-12;
    double quad = 1e-12;
    double root = 1e-12;
};

// Effective run configuration: metric, family and its parameter, sampling
// grid, solver tolerances and output paths. Built by merging an optional
// JSON config file with command-line overrides (flags win).
struct RunConfig {
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    Family family = Family::helicoid;
    double K = 0.5;                      // helicoid parameter
    double c = 2.0;                      // catenoid parameter
    std::optional<double> theta;         // catenoid: overrides the period root
    GridSpec grid;
    Tolerances tol;
    double section_level = 0.0;          // C for helicoid sections, mu for catenoid
    int threads = 1;
    std::string mesh_path;
    std::string csv_path;
    std::string report_path;
};

// Validates and fills defaults from a merged JSON object.
// Throws ConfigError with a field-level message on invalid input.
RunConfig parse_config(const nlohmann::json& merged);

// Reads a JSON config file; throws ConfigError if unreadable or malformed.
nlohmann::json load_config_file(const std::string& path);

nlohmann::json to_json(const RunConfig& cfg);

// FNV-1a hash of the canonical serialization; recorded in reports so a
// report can be matched to the exact configuration that produced it.
std::uint64_t config_hash(const RunConfig& cfg);

std::string family_name(Family f);

}  // namespace e2surf
