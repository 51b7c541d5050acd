#include "hankel/pipelines/report.hpp"

#include <cstdio>
#include <sstream>

namespace hankel::pipelines {

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::certification_failed: return "certification_failed";
        case Status::oracle_violation: return "oracle_violation";
    }
    return "certification_failed";
}

bool VerificationReport::all_checks_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {
        {"claim", r.claim},
        {"bound", r.bound.to_fraction_string()},
        {"status", to_string(r.status)},
        {"artifacts", r.artifacts},
        {"oracle",
         {{"samples", r.oracle.samples},
          {"observed_max", format_double(r.oracle.observed_max)},
          {"bound", format_double(r.oracle.bound)},
          {"gap", format_double(r.oracle.gap)},
          {"violations", r.oracle.violations}}},
        {"checks", std::move(checks)},
    };
}

std::string render(const VerificationReport& r) {
    std::ostringstream os;
    os << "claim:  " << r.claim << '\n';
    os << "bound:  " << r.bound.to_string() << '\n';
    os << "status: " << to_string(r.status) << '\n';
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    os << "oracle: " << r.oracle.samples << " samples, max " << format_double(r.oracle.observed_max) << ", bound "
       << format_double(r.oracle.bound) << ", gap " << format_double(r.oracle.gap) << '\n';
    for (const auto& a : r.artifacts) os << "artifact: " << a << '\n';
    return os.str();
}

}  // namespace hankel::pipelines
