#pragma once

#include <functional>

#include "hypermono/geometry.hpp"

namespace hm {

using FieldStrength = TwoForm;
using TwoFormField = std::function<TwoForm(const Point&)>;

/// A monopole (A, Phi) with optional closed-form curvature and Higgs derivatives.
struct FieldConfig {
    int n = 1;
    double p_mass = 0.5;
    double x0 = 0.0;
    double y0 = 0.0;
    double lambda = 1.0;
    OneFormField A;
    ScalarField Phi;
    TwoFormField F;       // empty when only FD curvature is available
    OneFormField dPhi;    // coordinate partials of Phi, empty when unavailable
};

/// Connection with its curvature, the input of the Chern-Simons functional.
struct Connection {
    OneFormField A;
    TwoFormField F;
};

FieldConfig one_monopole(double x0 = 0.0, double y0 = 0.0, double lambda = 1.0);
FieldConfig zero_config();

double profile_f(const FieldConfig& cfg, const Point& p);
FieldStrength field_strength(const FieldConfig& cfg, const Point& p);
/// F_ij = d_i A_j - d_j A_i + [A_i, A_j] by central differences.
FieldStrength field_strength_fd(const FieldConfig& cfg, const Point& p, const FDScheme& fd);

/// d^A Phi from closed-form partials.
OneForm higgs_derivative(const FieldConfig& cfg, const Point& p);
OneForm higgs_derivative_fd(const FieldConfig& cfg, const Point& p, const FDScheme& fd);

double bogomolny_residual(const FieldConfig& cfg, const Point& p, const FDScheme& fd);

/// Integrand of the energy functional per unit hyperbolic volume.
double energy_density(const FieldConfig& cfg, const Point& p);
/// 3 rho^4 f^2, valid for solutions of the Bogomolny equation.
double energy_density_bps(const FieldConfig& cfg, const Point& p);

/// Operator norm of an su(2) element.
double su2_norm(const Mat2& m);

Connection connection_of(const FieldConfig& cfg);
/// exp(s Phi) and the transformed connection g^-1 dg + g^-1 A g.
Mat2 higgs_exp(const FieldConfig& cfg, double s, const Point& p);
Connection higgs_gauge_transform(const FieldConfig& cfg, double s);

}  // namespace hm
