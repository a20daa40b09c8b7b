#include "hypermono/deformations.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace hm {

KillingSpinorBasis killing_spinors() {
    KillingSpinorBasis b;
    b.psi1 = [](const Point& p) { return Spinor{1.0 / std::sqrt(p.rho), 0.0}; };
    b.psi2 = [](const Point& p) {
        const double s = 1.0 / std::sqrt(p.rho);
        return Spinor{s * cplx(-p.x, p.y), s * p.rho};
    };
    b.sign = -1;
    return b;
}

KillingSpinorBasis killing_spinors_plus() {
    const KillingSpinorBasis m = killing_spinors();
    KillingSpinorBasis b;
    b.psi1 = [f = m.psi1](const Point& p) { return conj_spinor(f(p)); };
    b.psi2 = [f = m.psi2](const Point& p) { return conj_spinor(f(p)); };
    b.sign = +1;
    return b;
}

double killing_spinor_residual(const SpinorField& psi, int sign, const Point& p, const FDScheme& fd) {
    const Spinor s = psi(p);
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        TangentVec3 e;
        e[i] = 1.0;
        const Spinor lhs = cov_deriv_spinor(psi, e, p, fd);
        const Spinor rhs = (0.5 * sign * I_unit) * (cl_vector(e, p) * s);
        r = std::max(r, (lhs - rhs).max_abs());
    }
    return r;
}

double DeformationValue::max_abs() const { return std::max(hm::max_abs(a), phi.max_abs()); }

DeformationValue operator+(const DeformationValue& u, const DeformationValue& v) { return {u.a + v.a, u.phi + v.phi}; }
DeformationValue operator-(const DeformationValue& u, const DeformationValue& v) { return {u.a - v.a, u.phi - v.phi}; }
DeformationValue operator*(cplx s, const DeformationValue& u) { return {s * u.a, s * u.phi}; }

SpinGaugeMat cl(const DeformationValue& d, const Point& p) { return cl(d.a[0], d.a[1], d.a[2], d.phi, p); }

std::pair<EigenSpinorField, EigenSpinorField> eigenspinors(const FieldConfig& cfg) {
    if (!cfg.F) throw DomainError("eigenspinors need closed-form curvature");
    auto F = cfg.F;
    EigenSpinorField n1, n2;
    n1.nu = [F](const Point& p) {
        const TwoForm f = F(p);
        const cplx k = -I_unit * std::pow(p.rho, 1.5);
        return GaugeSpinor{k * f.xy, k * (f.yrho + I_unit * f.rhox)};
    };
    n2.nu = [F](const Point& p) {
        const TwoForm f = F(p);
        const cplx k = I_unit * std::pow(p.rho, 1.5);
        const cplx z = cplx(p.x, -p.y);
        return GaugeSpinor{k * (z * f.xy - p.rho * (f.yrho - I_unit * f.rhox)),
                           k * (z * (f.yrho + I_unit * f.rhox) + p.rho * f.xy)};
    };
    return {n1, n2};
}

GaugeSpinor eigenspinor_clifford(const FieldConfig& cfg, int alpha, const Point& p) {
    const TwoForm f = field_strength(cfg, p);
    const KillingSpinorBasis k = killing_spinors();
    const Spinor psi = alpha == 1 ? k.psi1(p) : k.psi2(p);
    return cl2(f.xy, f.yrho, f.rhox, p) * psi;
}

double dirac_eigen_residual(const FieldConfig& cfg, const EigenSpinorField& nu, const Point& p, const FDScheme& fd) {
    const GaugeSpinor v = nu.nu(p);
    const GaugeSpinor lhs = dirac(cfg.A, nu.nu, p, fd) - comm(cfg.Phi(p), v);
    return (lhs - (0.5 * nu.eigen_sign * I_unit) * v).max_abs();
}

DeformationValue contract(const TangentVec3& v, const TwoForm& F, const OneForm& dphi) {
    // F[i][j] with F[0][1] = F_xy, F[1][2] = F_yrho, F[2][0] = F_rhox
    const Mat2 Fm[3][3] = {{Mat2::zero(), F.xy, -F.rhox}, {-F.xy, Mat2::zero(), F.yrho}, {F.rhox, -F.yrho, Mat2::zero()}};
    DeformationValue out;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) out.a[j] += v[i] * Fm[i][j];
    for (int i = 0; i < 3; ++i) out.phi += v[i] * dphi[i];
    return out;
}

namespace {

void require_mu(int mu) {
    if (mu < 0 || mu > 3) throw DomainError("tangent vector index must be 0..3, got " + std::to_string(mu));
}

KillingKind z_kind(int mu) {
    return mu == 1 ? KillingKind::Z1 : (mu == 2 ? KillingKind::Z2 : KillingKind::Z3);
}

OneForm higgs_derivative_any(const FieldConfig& cfg, const Point& p) {
    if (cfg.dPhi) return higgs_derivative(cfg, p);
    return higgs_derivative_fd(cfg, p, default_fd(p));
}

}  // namespace

DeformationValue tangent_value(const FieldConfig& cfg, int mu, const Point& p) {
    require_mu(mu);
    const OneForm dphi = higgs_derivative_any(cfg, p);
    if (mu == 0) return {dphi, Mat2::zero()};
    return contract(killing_field(z_kind(mu), p), field_strength(cfg, p), dphi);
}

std::array<DeformationValue, 4> tangent_values(const FieldConfig& cfg, const Point& p) {
    const OneForm dphi = higgs_derivative_any(cfg, p);
    const TwoForm F = field_strength(cfg, p);
    return {DeformationValue{dphi, Mat2::zero()}, contract(killing_field(KillingKind::Z1, p), F, dphi),
            contract(killing_field(KillingKind::Z2, p), F, dphi), contract(killing_field(KillingKind::Z3, p), F, dphi)};
}

Deformation tangent_vector(const FieldConfig& cfg, int mu) {
    require_mu(mu);
    auto base = std::make_shared<FieldConfig>(cfg);
    Deformation d;
    d.a = [base, mu](const Point& p) { return tangent_value(*base, mu, p).a; };
    d.phi = [base, mu](const Point& p) { return tangent_value(*base, mu, p).phi; };
    d.label = "mu" + std::to_string(mu);
    return d;
}

std::array<std::array<cplx, 2>, 2> spinor_coefficients(int mu) {
    require_mu(mu);
    using C = std::array<std::array<cplx, 2>, 2>;
    switch (mu) {
        case 0: return C{{{0.0, 1.0}, {-1.0, 0.0}}};
        case 1: return C{{{-I_unit, 0.0}, {0.0, I_unit}}};
        case 2: return C{{{-1.0, 0.0}, {0.0, -1.0}}};
        default: return C{{{0.0, I_unit}, {I_unit, 0.0}}};
    }
}

SpinGaugeMat tangent_spinor_form(const FieldConfig& cfg, int mu, const Point& p) {
    const auto c = spinor_coefficients(mu);
    auto [e1, e2] = eigenspinors(cfg);
    const KillingSpinorBasis k = killing_spinors();
    const GaugeSpinor nu[2] = {e1.nu(p), e2.nu(p)};
    const CoSpinor dl[2] = {dual(k.psi1(p)), dual(k.psi2(p))};
    SpinGaugeMat out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (c[a][b] != cplx(0.0)) out = out + c[a][b] * tensor(nu[a], dl[b]);
    return out;
}

double gauge_fix_residual(const FieldConfig& cfg, const Deformation& d, int sign, const Point& p, const FDScheme& fd) {
    if (sign != 1 && sign != -1) throw DomainError("gauge-fixing sign must be +1 or -1");
    const Mat2 phi = d.phi(p);
    const Mat2 r = covariant_divergence(cfg.A, d.a, p, fd) + comm(cfg.Phi(p), phi) + (2.0 * sign * I_unit) * phi;
    return r.max_abs();
}

double lin_bogomolny_residual(const FieldConfig& cfg, const Deformation& d, const Point& p, const FDScheme& fd) {
    const OneForm grad = covariant_gradient(cfg.A, d.phi, p, fd);
    const OneForm curl = covariant_curl(cfg.A, d.a, p, fd);
    const OneForm a = d.a(p);
    const Mat2 Phi = cfg.Phi(p);
    OneForm r;
    for (int i = 0; i < 3; ++i) r[i] = grad[i] + comm(a[i], Phi) - curl[i];
    return max_abs(r);
}

namespace {

void require_j(int j) {
    if (j < 1 || j > 3) throw DomainError("chi index must be 1..3, got " + std::to_string(j));
}

const FieldConfig& unit_monopole() {
    static const FieldConfig cfg = one_monopole(0.0, 0.0, 1.0);
    return cfg;
}

double higgs_weight(ChiForm form) {
    switch (form) {
        case ChiForm::framed: return -1.0;
        case ChiForm::printed: return 1.0;
        default: return 0.0;
    }
}

}  // namespace

Mat2 chi(int j, const Point& p, ChiForm form) {
    require_j(j);
    require_valid(p);
    const double q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    switch (j) {
        case 1: return (I_unit / q) * (p.rho * sigma1() - p.x * sigma3());
        case 2: return (I_unit / q) * (p.rho * sigma2() - p.y * sigma3());
        default: return (I_unit / q) * sigma3() + higgs_weight(form) * unit_monopole().Phi(p);
    }
}

OneForm chi_partials(int j, const Point& p, ChiForm form) {
    require_j(j);
    require_valid(p);
    const double q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    Mat2 N;
    std::array<Mat2, 3> dN{};
    switch (j) {
        case 1:
            N = p.rho * sigma1() - p.x * sigma3();
            dN = {-sigma3(), Mat2::zero(), sigma1()};
            break;
        case 2:
            N = p.rho * sigma2() - p.y * sigma3();
            dN = {Mat2::zero(), -sigma3(), sigma2()};
            break;
        default:
            N = sigma3();
            break;
    }
    OneForm out;
    for (int k = 0; k < 3; ++k) out[k] = I_unit * ((1.0 / q) * dN[k] - (2.0 * p[k] / (q * q)) * N);
    if (j == 3 && form != ChiForm::bare) {
        const OneForm dP = unit_monopole().dPhi(p);
        for (int k = 0; k < 3; ++k) out[k] += higgs_weight(form) * dP[k];
    }
    return out;
}

DeformationValue chi_mode(int j, const Point& p, ChiForm form) {
    const FieldConfig& cfg = unit_monopole();
    const Mat2 c = chi(j, p, form);
    const OneForm d = chi_partials(j, p, form);
    const OneForm A = cfg.A(p);
    DeformationValue out;
    for (int k = 0; k < 3; ++k) out.a[k] = d[k] + comm(A[k], c);
    out.phi = comm(cfg.Phi(p), c);
    return out;
}

Deformation chi_deformation(int j, ChiForm form) {
    require_j(j);
    Deformation d;
    d.a = [j, form](const Point& p) { return chi_mode(j, p, form).a; };
    d.phi = [j, form](const Point& p) { return chi_mode(j, p, form).phi; };
    d.label = "chi" + std::to_string(j);
    return d;
}

DeformationValue y1_transcription(const Point& p) {
    require_valid(p);
    const double x = p.x, y = p.y, r = p.rho;
    const double q = 1.0 + x * x + y * y + r * r;
    const double w = 1.0 - x * x + y * y + r * r;
    const cplx k = I_unit / (q * q);
    DeformationValue out;
    out.a[0] = k * (2.0 * x * (y * sigma3() - r * sigma2()));
    out.a[1] = k * (2.0 * x * r * sigma1() + w * sigma3());
    out.a[2] = -k * (2.0 * x * y * sigma1() + w * sigma2());
    out.phi = (k * r) * (2.0 * x * (y * sigma2() + r * sigma3()) - w * sigma1());
    return out;
}

DeformationValue pluricomplex_J(const DeformationValue& d, const Point& p) {
    require_valid(p);
    DeformationValue out;
    out.a[0] = -d.a[1];
    out.a[1] = d.a[0];
    out.a[2] = (-1.0 / p.rho) * d.phi;
    out.phi = p.rho * d.a[2];
    return out;
}

GaugeSpinor real_tangent_spinor(const DeformationValue& d, const Point& p) {
    require_valid(p);
    const cplx k = -I_unit * std::pow(p.rho, 1.5);
    return {k * (d.a[0] - I_unit * d.a[1]), k * (-d.a[2] + (I_unit / p.rho) * d.phi)};
}

SpinGaugeMat real_tangent_reconstruction(const DeformationValue& d, const Point& p) {
    const GaugeSpinor nu = real_tangent_spinor(d, p);
    const Spinor psi = killing_spinors().psi1(p);
    return tensor(nu, dual(psi)) + tensor(conj_spinor(nu), dual(conj_spinor(psi)));
}

}  // namespace hm

namespace hm {

Spinor lifted_killing_spinor(int alpha, const Point& p, double theta) {
    require_valid(p);
    const double s = std::pow(4.0 / (1.0 + p.rho * p.rho + p.x * p.x + p.y * p.y), 0.25);
    if (alpha == 1) return {s, 0.0};
    if (alpha == 2) return {s * cplx(-p.x, p.y), s * p.rho * std::exp(I_unit * theta)};
    throw DomainError("Killing spinor index must be 1 or 2");
}

}  // namespace hm
