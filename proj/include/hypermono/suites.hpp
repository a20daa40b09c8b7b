#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermono/integrate.hpp"
#include "hypermono/report.hpp"

namespace hm {

struct VerifyOptions {
    double h = 1e-4;         // base step, scaled by max(1, rho)
    int points = 10;
    std::uint64_t seed = 42;
    double residual_tol = 1e-5;
    double identity_tol = 1e-10;
    double min_order = 1.7;
};

inline const std::vector<std::string> suite_names{"algebra", "geometry", "monopole", "deformations"};

/// Seeded sample points with x, y in [-1.5, 1.5] and rho in [0.3, 2.5].
std::vector<Point> sample_points(int count, std::uint64_t seed);

/// Least-squares slope of log(residual) against log(h).
double convergence_order(const std::vector<double>& h, const std::vector<double>& residual);

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

/// Residual families of the explicit solution with their measured orders.
std::vector<CheckResult> residual_checks(const VerifyOptions& opt);
/// Closed-form identities that hold to rounding.
std::vector<CheckResult> identity_checks(const VerifyOptions& opt);

}  // namespace hm
