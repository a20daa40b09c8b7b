#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermono/algebra.hpp"

namespace hm {

struct Scalar {
    cplx v{};
    bool complex = false;

    Scalar() = default;
    Scalar(double x) : v(x) {}
    Scalar(cplx z) : v(z), complex(true) {}
    bool operator==(const Scalar&) const = default;
};

enum class CheckKind {
    relative,  // |value - expected| / |expected| <= tolerance, absolute when expected is 0
    at_most,   // |value| <= tolerance
    at_least   // value >= tolerance
};

struct CheckResult {
    std::string name;
    Scalar value;
    std::optional<Scalar> expected;
    std::optional<double> rel_error;
    double tolerance = 0.0;
    CheckKind kind = CheckKind::at_most;
    bool pass = false;
    bool operator==(const CheckResult&) const = default;
};

CheckResult check_relative(std::string name, Scalar value, Scalar expected, double tolerance);
CheckResult check_at_most(std::string name, double value, double tolerance);
CheckResult check_at_least(std::string name, double value, double minimum);

struct LadderEntry {
    std::string name;
    int N = 0;
    Scalar value;
    bool operator==(const LadderEntry&) const = default;
};

struct RunReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckResult> results;
    std::vector<LadderEntry> convergence;
    double wall_time_seconds = 0.0;

    bool all_pass() const;
    bool operator==(const RunReport&) const = default;
};

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);
std::string to_text(const RunReport& r);
std::string to_csv(const RunReport& r);

}  // namespace hm
