#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermono/deformations.hpp"

namespace hm {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
    int nodes_per_axis = 64;
    double axis_scale = 1.0;
    double rel_tol = 1e-4;
    double x_center = 0.0;
    double y_center = 0.0;
    int threads = 0;  // 0: HYPERMONO_THREADS, then hardware concurrency
};

/// Axis scale max(1, lambda) centred on the monopole.
QuadratureSpec quadrature_for(const FieldConfig& cfg, int nodes_per_axis);
void validate(const QuadratureSpec& spec);
int resolve_threads(int requested);

struct GLRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
/// Gauss-Legendre rule on (-1, 1).
GLRule gauss_legendre(int n);

using Density = std::function<cplx(const Point&)>;
using MultiDensity = std::function<void(const Point&, cplx* out)>;

/// Integral against the hyperbolic volume form.
cplx integrate_h3(const Density& density, const QuadratureSpec& spec);
std::vector<cplx> integrate_h3(const MultiDensity& density, int count, const QuadratureSpec& spec);
/// Integral of w dx^dy^drho with the orientation of the volume form.
cplx integrate_top_form(const Density& w, const QuadratureSpec& spec);
/// Integral of w dx dy over the horosphere rho = const.
std::vector<cplx> integrate_horosphere(const MultiDensity& w, int count, double rho, const QuadratureSpec& spec);

double energy(const FieldConfig& cfg, const QuadratureSpec& spec);

cplx omega_pair(const EigenSpinorField& nu1, const EigenSpinorField& nu2, const QuadratureSpec& spec);

using Complex4x4 = std::array<std::array<cplx, 4>, 4>;

struct GramMatrix {
    Complex4x4 direct{};
    Complex4x4 omega{};
    std::array<std::array<cplx, 2>, 2> omega_nu{};  // omega(nu_alpha, nu_gamma)
};

GramMatrix gram_matrix(const FieldConfig& cfg, const QuadratureSpec& spec);

/// Pointwise integrand of the bulk Chern-Simons form, coefficient of dx^dy^drho.
cplx chern_simons_form(const OneForm& A, const TwoForm& F);

struct ChernSimonsResult {
    double bulk1 = 0.0;
    double bulk0 = 0.0;
    std::vector<double> horosphere_rho;
    std::vector<double> horosphere_value;
    double boundary = 0.0;  // extrapolated to the conformal boundary
    double total = 0.0;
    bool converged = false;
    bool monotone = false;
};

ChernSimonsResult chern_simons_detail(const Connection& A0, const Connection& A1, const QuadratureSpec& spec);
/// Throws ConvergenceError when the boundary extrapolation does not settle.
double chern_simons(const Connection& A0, const Connection& A1, const QuadratureSpec& spec);

/// 2 int Tr(F ^ d^A Phi).
double cs_rate(const FieldConfig& cfg, const QuadratureSpec& spec);
/// int Tr(F ^ d^A chi_j) for the unit monopole.
double framedness(int j, const QuadratureSpec& spec, ChiForm form = ChiForm::framed);

struct IndexPolynomial {
    std::map<int, long long> coefficients;

    long long coefficient(int exponent) const;
    long long dim_plus() const { return coefficient(1); }
    long long dim_minus() const { return coefficient(-1); }
    bool palindromic() const;
    std::string to_string() const;
};

/// 2n sum_{j=0}^{4p-1} gamma^{2j+1-4p} with p = p2 / 2.
IndexPolynomial equivariant_index(int n, int p2);

}  // namespace hm
