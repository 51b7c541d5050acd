#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hankel/rational.hpp"

namespace hankel::pipelines {

enum class Status { verified, certification_failed, oracle_violation };

std::string to_string(Status s);

struct OracleStats {
    long samples = 0;
    double observed_max = 0.0;
    double bound = 0.0;
    double gap = 0.0;  // bound - observed_max
    long violations = 0;
};

struct SubCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::string claim;
    Rational bound;
    Status status = Status::certification_failed;
    std::vector<std::string> artifacts;
    OracleStats oracle;
    std::vector<SubCheck> checks;

    bool verified() const { return status == Status::verified; }
    bool all_checks_passed() const;
    void add(std::string name, bool passed, std::string detail = {});
};

/// Floats with 12 significant digits.
std::string format_double(double v);

/// {claim, bound: "num/den", status, artifacts, oracle, checks}.
nlohmann::json report_to_json(const VerificationReport& r);

/// Multi-line human-readable rendering.
std::string render(const VerificationReport& r);

}  // namespace hankel::pipelines
