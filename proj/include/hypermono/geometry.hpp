#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "hypermono/algebra.hpp"

namespace hm {

struct StencilError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TangentVec3 {
    cplx vx{}, vy{}, vrho{};

    cplx operator[](int i) const { return i == 0 ? vx : (i == 1 ? vy : vrho); }
    cplx& operator[](int i) { return i == 0 ? vx : (i == 1 ? vy : vrho); }
    double max_abs() const;
};

TangentVec3 operator+(const TangentVec3& a, const TangentVec3& b);
TangentVec3 operator-(const TangentVec3& a, const TangentVec3& b);
TangentVec3 operator*(double s, const TangentVec3& a);
TangentVec3 operator*(cplx s, const TangentVec3& a);

/// Gauge valued one-form, components along dx, dy, drho.
using OneForm = std::array<Mat2, 3>;

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(double s, const OneForm& a);
OneForm operator*(cplx s, const OneForm& a);
double max_abs(const OneForm& a);

/// Gauge valued two-form with components F_xy, F_yrho, F_rhox.
struct TwoForm {
    Mat2 xy{}, yrho{}, rhox{};
    double max_abs() const;
};

TwoForm operator+(const TwoForm& a, const TwoForm& b);
TwoForm operator-(const TwoForm& a, const TwoForm& b);
TwoForm operator*(double s, const TwoForm& a);

using ScalarField = std::function<Mat2(const Point&)>;
using OneFormField = std::function<OneForm(const Point&)>;
using SpinorField = std::function<Spinor(const Point&)>;
using GaugeSpinorField = std::function<GaugeSpinor(const Point&)>;
using VectorField = std::function<TangentVec3(const Point&)>;

struct FDScheme {
    double h = 1e-4;
    int order = 2;
};

/// h = 1e-4 max(1, rho), capped at rho/100 so the stencil stays inside.
FDScheme default_fd(const Point& p);
void check_stencil(const Point& p, const FDScheme& fd);

template <class F>
auto partial(const F& f, const Point& p, int axis, const FDScheme& fd) {
    check_stencil(p, fd);
    auto central = [&](double h) {
        Point a = p, b = p;
        a[axis] += h;
        b[axis] -= h;
        return (0.5 / h) * (f(a) - f(b));
    };
    if (fd.order == 2) return central(fd.h);
    auto coarse = central(fd.h);
    auto fine = central(0.5 * fd.h);
    return (4.0 / 3.0) * fine - (1.0 / 3.0) * coarse;
}

enum class KillingKind { X1, X2, X3, Y1, Y2, Y3, Z1, Z2, Z3 };

inline constexpr std::array<KillingKind, 9> all_killing_kinds{
    KillingKind::X1, KillingKind::X2, KillingKind::X3, KillingKind::Y1, KillingKind::Y2,
    KillingKind::Y3, KillingKind::Z1, KillingKind::Z2, KillingKind::Z3};

std::string to_string(KillingKind k);
TangentVec3 killing_field(KillingKind kind, const Point& p);
/// jac[i][j] = d_j V^i, closed form.
std::array<std::array<cplx, 3>, 3> killing_jacobian(KillingKind kind, const Point& p);
/// [U, V]^i = U^j d_j V^i - V^j d_j U^i.
TangentVec3 lie_bracket(KillingKind u, KillingKind v, const Point& p);

cplx metric_pair(const TangentVec3& u, const TangentVec3& v, const Point& p);
cplx christoffel(int k, int i, int j, const Point& p);

double killing_residual(const VectorField& field, const Point& p, const FDScheme& fd);
double killing_residual(KillingKind kind, const Point& p, const FDScheme& fd);

std::array<Mat2, 3> spin_connection(const Point& p);
/// Clifford action of the metric dual of a tangent vector.
Mat2 cl_vector(const TangentVec3& v, const Point& p);
Spinor cov_deriv_spinor(const SpinorField& field, const TangentVec3& dir, const Point& p, const FDScheme& fd);
Spinor dirac(const SpinorField& field, const Point& p, const FDScheme& fd);

TwoForm hodge(const OneForm& a, const Point& p);
OneForm hodge(const TwoForm& f, const Point& p);
/// Hodge star of dx^dy^drho, i.e. the coefficient c with *(dx^dy^drho) = c.
double hodge_top(const Point& p);

OneForm covariant_gradient(const OneFormField& A, const ScalarField& phi, const Point& p, const FDScheme& fd);
TwoForm covariant_exterior(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd);
OneForm covariant_curl(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd);
Mat2 covariant_divergence(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd);
GaugeSpinor dirac(const OneFormField& A, const GaugeSpinorField& nu, const Point& p, const FDScheme& fd);

}  // namespace hm
