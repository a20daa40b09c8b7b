#pragma once

#include <string>
#include <utility>

#include "hypermono/monopole.hpp"

namespace hm {

struct KillingSpinorBasis {
    SpinorField psi1;
    SpinorField psi2;
    int sign = -1;  // Killing constant sign * i/2
};

KillingSpinorBasis killing_spinors();
/// K+ basis obtained from K- through the quaternionic structure.
KillingSpinorBasis killing_spinors_plus();

/// max over coordinate directions of |nabla_X psi - sign (i/2) X.psi|.
double killing_spinor_residual(const SpinorField& psi, int sign, const Point& p, const FDScheme& fd);

struct DeformationValue {
    OneForm a{};
    Mat2 phi{};
    double max_abs() const;
};

DeformationValue operator+(const DeformationValue& u, const DeformationValue& v);
DeformationValue operator-(const DeformationValue& u, const DeformationValue& v);
DeformationValue operator*(cplx s, const DeformationValue& u);

struct Deformation {
    OneFormField a;
    ScalarField phi;
    std::string label = "custom";

    DeformationValue operator()(const Point& p) const { return {a(p), phi(p)}; }
};

SpinGaugeMat cl(const DeformationValue& d, const Point& p);

struct EigenSpinorField {
    GaugeSpinorField nu;
    int eigen_sign = -1;
};

std::pair<EigenSpinorField, EigenSpinorField> eigenspinors(const FieldConfig& cfg);
/// cl(F) psi_alpha, alpha in {1, 2}.
GaugeSpinor eigenspinor_clifford(const FieldConfig& cfg, int alpha, const Point& p);
double dirac_eigen_residual(const FieldConfig& cfg, const EigenSpinorField& nu, const Point& p, const FDScheme& fd);

/// (Z_j contracted into F, Z_j contracted into d^A Phi); Z_0 stands for (d^A Phi, 0).
DeformationValue tangent_value(const FieldConfig& cfg, int mu, const Point& p);
std::array<DeformationValue, 4> tangent_values(const FieldConfig& cfg, const Point& p);
DeformationValue contract(const TangentVec3& v, const TwoForm& F, const OneForm& dphi);
Deformation tangent_vector(const FieldConfig& cfg, int mu);
/// The same tangent vector assembled from eigenspinors and Killing spinors.
SpinGaugeMat tangent_spinor_form(const FieldConfig& cfg, int mu, const Point& p);

double gauge_fix_residual(const FieldConfig& cfg, const Deformation& d, int sign, const Point& p, const FDScheme& fd);
double lin_bogomolny_residual(const FieldConfig& cfg, const Deformation& d, const Point& p, const FDScheme& fd);

enum class ChiForm {
    framed,   // chi_3 = i sigma_3 / (1 + |x|^2) - Phi
    printed,  // chi_3 = i sigma_3 / (1 + |x|^2) + Phi
    bare      // chi_3 = i sigma_3 / (1 + |x|^2)
};

/// Gauge generators of the unit monopole; the form only affects j = 3.
Mat2 chi(int j, const Point& p, ChiForm form = ChiForm::framed);
/// Closed-form coordinate partials of chi.
OneForm chi_partials(int j, const Point& p, ChiForm form = ChiForm::framed);
/// Infinitesimal gauge mode (d^A chi, [Phi, chi]) of the unit monopole.
DeformationValue chi_mode(int j, const Point& p, ChiForm form = ChiForm::framed);
Deformation chi_deformation(int j, ChiForm form = ChiForm::framed);

/// Printed closed forms of Y_1 contracted into F and d^A Phi for the unit monopole.
DeformationValue y1_transcription(const Point& p);

DeformationValue pluricomplex_J(const DeformationValue& d, const Point& p);

/// nu = -i rho^{3/2} (a_x - i a_y ; -a_rho + i phi / rho) for the Killing spinor psi_1.
GaugeSpinor real_tangent_spinor(const DeformationValue& d, const Point& p);
/// nu (x) psi_1^* + conj(nu) (x) conj(psi_1)^*.
SpinGaugeMat real_tangent_reconstruction(const DeformationValue& d, const Point& p);

}  // namespace hm

namespace hm {

/// c[alpha][beta] with cl(mu-th tangent vector) = sum c nu_alpha (x) psi_beta^*.
std::array<std::array<cplx, 2>, 2> spinor_coefficients(int mu);

}  // namespace hm

namespace hm {

/// Killing spinors in the frame that extends over the fixed R^2 of R^4, at angle theta.
Spinor lifted_killing_spinor(int alpha, const Point& p, double theta);

}  // namespace hm
