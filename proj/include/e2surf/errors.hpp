#pragma once

#include <stdexcept>
#include <string>

namespace e2surf {

// Numerics
struct NonFinite : std::runtime_error {
    explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct NoRoot : std::runtime_error {
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

// Gauss map / representation
struct PotentialVanishes : std::runtime_error {
    explicit PotentialVanishes(const std::string& what) : std::runtime_error(what) {}
};
struct GaussMapAtPole : std::runtime_error {
    explicit GaussMapAtPole(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateMetric : std::runtime_error {
    explicit DegenerateMetric(const std::string& what) : std::runtime_error(what) {}
};

// Surface families
struct InvalidK : std::runtime_error {
    explicit InvalidK(const std::string& what) : std::runtime_error(what) {}
};
struct OutsideOmega : std::runtime_error {
    explicit OutsideOmega(const std::string& what) : std::runtime_error(what) {}
};
struct PositivityViolated : std::runtime_error {
    explicit PositivityViolated(const std::string& what) : std::runtime_error(what) {}
};
struct BracketingFailed : std::runtime_error {
    explicit BracketingFailed(const std::string& what) : std::runtime_error(what) {}
};
struct PeriodObstruction : std::runtime_error {
    explicit PeriodObstruction(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientSamples : std::runtime_error {
    explicit InsufficientSamples(const std::string& what) : std::runtime_error(what) {}
};

// CLI / IO
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace e2surf
