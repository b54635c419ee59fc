#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "e2surf/config.hpp"

namespace e2surf {

// One verification record: a named identity, the measured residual (or
// negated margin for strict-positivity checks), and its pass threshold.
struct CheckRecord {
    std::string name;
    std::string anchor;  // the identity being measured, in plain notation
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string error;   // non-empty when the check aborted with an exception
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    nlohmann::json solver;  // solved constants: W / U, theta_tilde, H, Z, ...
    nlohmann::json config;
    std::string config_hash;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    int failed() const { return total() - passed(); }
    bool all_passed() const { return passed() == total(); }
};

// Runs the full invariant suite of the configured family. Solver failures
// inside individual checks become failed records, not aborts.
VerificationReport run_verification(const RunConfig& cfg);

nlohmann::json report_to_json(const VerificationReport& rep);

void write_report(const VerificationReport& rep, const std::string& path);

}  // namespace e2surf
