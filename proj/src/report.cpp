#include "hypermono/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace hm {

namespace {

double rel_error(cplx v, cplx e) {
    const double d = std::abs(v - e);
    return std::abs(e) > 0.0 ? d / std::abs(e) : d;
}

// JSON has no inf/nan; those travel as strings
nlohmann::json number_json(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

double number_from(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw std::invalid_argument("not a number: " + s);
}

nlohmann::json scalar_json(const Scalar& s) {
    if (s.complex) return {{"re", number_json(s.v.real())}, {"im", number_json(s.v.imag())}};
    return number_json(s.v.real());
}

Scalar scalar_from(const nlohmann::json& j) {
    if (j.is_object()) return Scalar(cplx(number_from(j.at("re")), number_from(j.at("im"))));
    return Scalar(number_from(j));
}

const char* kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::relative: return "relative";
        case CheckKind::at_most: return "at_most";
        default: return "at_least";
    }
}

CheckKind kind_from(const std::string& s) {
    if (s == "relative") return CheckKind::relative;
    if (s == "at_most") return CheckKind::at_most;
    if (s == "at_least") return CheckKind::at_least;
    throw std::invalid_argument("unknown check kind: " + s);
}

std::string format_scalar(const Scalar& s) {
    std::ostringstream os;
    os << std::setprecision(10);
    if (!s.complex) {
        os << s.v.real();
    } else {
        os << s.v.real() << (s.v.imag() < 0 ? " - " : " + ") << std::abs(s.v.imag()) << "i";
    }
    return os.str();
}

}  // namespace

CheckResult check_relative(std::string name, Scalar value, Scalar expected, double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.expected = expected;
    c.rel_error = rel_error(value.v, expected.v);
    c.tolerance = tolerance;
    c.kind = CheckKind::relative;
    c.pass = std::isfinite(*c.rel_error) && *c.rel_error <= tolerance;
    return c;
}

CheckResult check_at_most(std::string name, double value, double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tolerance;
    c.kind = CheckKind::at_most;
    c.pass = std::isfinite(value) && std::abs(value) <= tolerance;
    return c;
}

CheckResult check_at_least(std::string name, double value, double minimum) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = minimum;
    c.kind = CheckKind::at_least;
    c.pass = std::isfinite(value) && value >= minimum;
    return c;
}

bool RunReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["parameters"] = r.parameters;
    j["results"] = nlohmann::json::array();
    for (const auto& c : r.results) {
        nlohmann::json e{{"name", c.name}, {"value", scalar_json(c.value)}, {"tolerance", number_json(c.tolerance)},
                         {"kind", kind_name(c.kind)}, {"pass", c.pass}};
        if (c.expected) e["expected"] = scalar_json(*c.expected);
        if (c.rel_error) e["rel_error"] = number_json(*c.rel_error);
        j["results"].push_back(e);
    }
    j["convergence"] = nlohmann::json::array();
    for (const auto& l : r.convergence)
        j["convergence"].push_back({{"name", l.name}, {"N", l.N}, {"value", scalar_json(l.value)}});
    j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& e : j.at("results")) {
        CheckResult c;
        c.name = e.at("name").get<std::string>();
        c.value = scalar_from(e.at("value"));
        if (e.contains("expected")) c.expected = scalar_from(e.at("expected"));
        if (e.contains("rel_error")) c.rel_error = number_from(e.at("rel_error"));
        c.tolerance = number_from(e.at("tolerance"));
        c.kind = kind_from(e.at("kind").get<std::string>());
        c.pass = e.at("pass").get<bool>();
        r.results.push_back(std::move(c));
    }
    for (const auto& e : j.at("convergence"))
        r.convergence.push_back({e.at("name").get<std::string>(), e.at("N").get<int>(), scalar_from(e.at("value"))});
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return r;
}

std::string to_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (!r.parameters.empty()) os << "parameters: " << r.parameters.dump() << "\n";
    for (const auto& c : r.results) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " = " << format_scalar(c.value);
        if (c.expected) os << "  expected " << format_scalar(*c.expected);
        if (c.rel_error) os << "  err " << std::setprecision(3) << *c.rel_error;
        os << "  " << (c.kind == CheckKind::at_least ? "min " : "tol ") << std::setprecision(3) << c.tolerance << "\n";
    }
    if (!r.convergence.empty()) {
        os << "convergence:\n";
        for (const auto& l : r.convergence)
            os << "  " << l.name << "  N=" << l.N << "  " << format_scalar(l.value) << "\n";
    }
    size_t passed = 0;
    for (const auto& c : r.results) passed += c.pass;
    os << passed << "/" << r.results.size() << " checks passed";
    os << "  (" << std::setprecision(3) << r.wall_time_seconds << " s)\n";
    return os.str();
}

std::string to_csv(const RunReport& r) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "name,value_re,value_im,expected_re,expected_im,rel_error,tolerance,kind,pass\n";
    for (const auto& c : r.results) {
        os << '"' << c.name << "\"," << c.value.v.real() << ',' << c.value.v.imag() << ',';
        if (c.expected) os << c.expected->v.real() << ',' << c.expected->v.imag();
        else os << ',';
        os << ',';
        if (c.rel_error) os << *c.rel_error;
        os << ',' << c.tolerance << ',' << kind_name(c.kind) << ',' << (c.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace hm
