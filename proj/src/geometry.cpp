#include "hypermono/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hm {

double TangentVec3::max_abs() const { return std::max({std::abs(vx), std::abs(vy), std::abs(vrho)}); }

TangentVec3 operator+(const TangentVec3& a, const TangentVec3& b) {
    return {a.vx + b.vx, a.vy + b.vy, a.vrho + b.vrho};
}
TangentVec3 operator-(const TangentVec3& a, const TangentVec3& b) {
    return {a.vx - b.vx, a.vy - b.vy, a.vrho - b.vrho};
}
TangentVec3 operator*(double s, const TangentVec3& a) { return {s * a.vx, s * a.vy, s * a.vrho}; }
TangentVec3 operator*(cplx s, const TangentVec3& a) { return {s * a.vx, s * a.vy, s * a.vrho}; }

OneForm operator+(const OneForm& a, const OneForm& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
OneForm operator-(const OneForm& a, const OneForm& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
OneForm operator*(double s, const OneForm& a) { return {s * a[0], s * a[1], s * a[2]}; }
OneForm operator*(cplx s, const OneForm& a) { return {s * a[0], s * a[1], s * a[2]}; }
double max_abs(const OneForm& a) { return std::max({a[0].max_abs(), a[1].max_abs(), a[2].max_abs()}); }

double TwoForm::max_abs() const { return std::max({xy.max_abs(), yrho.max_abs(), rhox.max_abs()}); }
TwoForm operator+(const TwoForm& a, const TwoForm& b) { return {a.xy + b.xy, a.yrho + b.yrho, a.rhox + b.rhox}; }
TwoForm operator-(const TwoForm& a, const TwoForm& b) { return {a.xy - b.xy, a.yrho - b.yrho, a.rhox - b.rhox}; }
TwoForm operator*(double s, const TwoForm& a) { return {s * a.xy, s * a.yrho, s * a.rhox}; }

FDScheme default_fd(const Point& p) {
    require_valid(p);
    return {std::min(1e-4 * std::max(1.0, p.rho), 1e-2 * p.rho), 2};
}

void check_stencil(const Point& p, const FDScheme& fd) {
    require_valid(p);
    if (fd.order != 2 && fd.order != 4) throw DomainError("finite-difference order must be 2 or 4");
    if (!(fd.h > 0.0) || !(fd.h < 0.5 * p.rho)) {
        std::ostringstream os;
        os << "stencil leaves the half-space: h = " << fd.h << " at rho = " << p.rho;
        throw StencilError(os.str());
    }
}

std::string to_string(KillingKind k) {
    static const char* names[] = {"X1", "X2", "X3", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"};
    return names[static_cast<int>(k)];
}

namespace {

TangentVec3 real_field(KillingKind kind, const Point& p) {
    const double x = p.x, y = p.y, r = p.rho;
    const double n2 = x * x + y * y + r * r;
    switch (kind) {
        case KillingKind::X1: return {x * y, y * y + 0.5 * (1.0 - n2), y * r};
        case KillingKind::X2: return {-x * x - 0.5 * (1.0 - n2), -x * y, -x * r};
        case KillingKind::X3: return {-y, x, 0.0};
        case KillingKind::Y1: return {-x * x + 0.5 * (1.0 + n2), -x * y, -x * r};
        case KillingKind::Y2: return {-x * y, -y * y + 0.5 * (1.0 + n2), -y * r};
        case KillingKind::Y3: return {x, y, r};
        default: return {};
    }
}

using Jac = std::array<std::array<cplx, 3>, 3>;

Jac real_jacobian(KillingKind kind, const Point& p) {
    const double x = p.x, y = p.y, r = p.rho;
    switch (kind) {
        case KillingKind::X1: return Jac{{{y, x, 0.0}, {-x, y, -r}, {0.0, r, y}}};
        case KillingKind::X2: return Jac{{{-x, y, r}, {-y, -x, 0.0}, {-r, 0.0, -x}}};
        case KillingKind::X3: return Jac{{{0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
        case KillingKind::Y1: return Jac{{{-x, y, r}, {-y, -x, 0.0}, {-r, 0.0, -x}}};
        case KillingKind::Y2: return Jac{{{-y, -x, 0.0}, {x, -y, r}, {0.0, -r, -y}}};
        case KillingKind::Y3: return Jac{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
        default: return {};
    }
}

std::pair<KillingKind, KillingKind> z_parts(KillingKind kind) {
    switch (kind) {
        case KillingKind::Z1: return {KillingKind::Y1, KillingKind::X1};
        case KillingKind::Z2: return {KillingKind::Y2, KillingKind::X2};
        default: return {KillingKind::Y3, KillingKind::X3};
    }
}

bool is_complex_kind(KillingKind k) {
    return k == KillingKind::Z1 || k == KillingKind::Z2 || k == KillingKind::Z3;
}

}  // namespace

TangentVec3 killing_field(KillingKind kind, const Point& p) {
    require_valid(p);
    if (!is_complex_kind(kind)) return real_field(kind, p);
    auto [yk, xk] = z_parts(kind);
    return real_field(yk, p) + I_unit * real_field(xk, p);
}

std::array<std::array<cplx, 3>, 3> killing_jacobian(KillingKind kind, const Point& p) {
    require_valid(p);
    if (!is_complex_kind(kind)) return real_jacobian(kind, p);
    auto [yk, xk] = z_parts(kind);
    Jac a = real_jacobian(yk, p), b = real_jacobian(xk, p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] += I_unit * b[i][j];
    return a;
}

TangentVec3 lie_bracket(KillingKind u, KillingKind v, const Point& p) {
    const TangentVec3 U = killing_field(u, p), V = killing_field(v, p);
    const Jac JU = killing_jacobian(u, p), JV = killing_jacobian(v, p);
    TangentVec3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += U[j] * JV[i][j] - V[j] * JU[i][j];
    return r;
}

cplx metric_pair(const TangentVec3& u, const TangentVec3& v, const Point& p) {
    require_valid(p);
    return (u.vx * v.vx + u.vy * v.vy + u.vrho * v.vrho) / (p.rho * p.rho);
}

cplx christoffel(int k, int i, int j, const Point& p) {
    // g = exp(2u) delta with u = -log(rho)
    const double du[3] = {0.0, 0.0, -1.0 / p.rho};
    double g = 0.0;
    if (k == i) g += du[j];
    if (k == j) g += du[i];
    if (i == j) g -= du[k];
    return g;
}

double killing_residual(const VectorField& field, const Point& p, const FDScheme& fd) {
    check_stencil(p, fd);
    auto lowered = [&](const Point& q) { return (1.0 / (q.rho * q.rho)) * field(q); };
    const TangentVec3 low = lowered(p);
    std::array<TangentVec3, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = partial(lowered, p, i, fd);
    auto nabla = [&](int i, int j) {
        cplx v = d[i][j];
        for (int k = 0; k < 3; ++k) v -= christoffel(k, i, j, p) * low[k];
        return v;
    };
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) r = std::max(r, std::abs(nabla(i, j) + nabla(j, i)));
    return r;
}

double killing_residual(KillingKind kind, const Point& p, const FDScheme& fd) {
    return killing_residual([kind](const Point& q) { return killing_field(kind, q); }, p, fd);
}

std::array<Mat2, 3> spin_connection(const Point& p) {
    require_valid(p);
    const cplx c = I_unit / (2.0 * p.rho);
    return {c * sigma2(), -c * sigma1(), Mat2::zero()};
}

Mat2 cl_vector(const TangentVec3& v, const Point& p) {
    const double w = 1.0 / (p.rho * p.rho);
    return cl_scalar(w * v.vx, w * v.vy, w * v.vrho, 0.0, p);
}

Spinor cov_deriv_spinor(const SpinorField& field, const TangentVec3& dir, const Point& p, const FDScheme& fd) {
    const auto w = spin_connection(p);
    const Spinor s = field(p);
    Spinor r;
    for (int i = 0; i < 3; ++i) {
        if (dir[i] == cplx(0.0)) continue;
        r = r + dir[i] * (partial(field, p, i, fd) + w[i] * s);
    }
    return r;
}

Spinor dirac(const SpinorField& field, const Point& p, const FDScheme& fd) {
    const auto w = spin_connection(p);
    const Spinor s = field(p);
    Spinor r;
    for (int i = 0; i < 3; ++i) {
        const Spinor nab = partial(field, p, i, fd) + w[i] * s;
        r = r + (-I_unit * p.rho) * (sigma(i + 1) * nab);
    }
    return r;
}

TwoForm hodge(const OneForm& a, const Point& p) {
    require_valid(p);
    const double c = -1.0 / p.rho;
    return {c * a[2], c * a[0], c * a[1]};
}

OneForm hodge(const TwoForm& f, const Point& p) {
    require_valid(p);
    const double c = -p.rho;
    return {c * f.yrho, c * f.rhox, c * f.xy};
}

double hodge_top(const Point& p) {
    require_valid(p);
    // Vol = -rho^-3 drho^dx^dy = -rho^-3 dx^dy^drho
    return -p.rho * p.rho * p.rho;
}

OneForm covariant_gradient(const OneFormField& A, const ScalarField& phi, const Point& p, const FDScheme& fd) {
    const OneForm a = A(p);
    const Mat2 f = phi(p);
    OneForm r;
    for (int i = 0; i < 3; ++i) r[i] = partial(phi, p, i, fd) + comm(a[i], f);
    return r;
}

TwoForm covariant_exterior(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd) {
    const OneForm Ap = A(p), ap = a(p);
    std::array<OneForm, 3> d;  // d[i][j] = d_i a_j
    for (int i = 0; i < 3; ++i) d[i] = partial(a, p, i, fd);
    auto comp = [&](int i, int j) { return d[i][j] - d[j][i] + comm(Ap[i], ap[j]) - comm(Ap[j], ap[i]); };
    return {comp(0, 1), comp(1, 2), comp(2, 0)};
}

OneForm covariant_curl(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd) {
    return hodge(covariant_exterior(A, a, p, fd), p);
}

Mat2 covariant_divergence(const OneFormField& A, const OneFormField& a, const Point& p, const FDScheme& fd) {
    auto star_a = [&](const Point& q) { return hodge(a(q), q); };
    const TwoForm s = star_a(p);
    const OneForm Ap = A(p);
    const TwoForm dx = partial(star_a, p, 0, fd);
    const TwoForm dy = partial(star_a, p, 1, fd);
    const TwoForm dr = partial(star_a, p, 2, fd);
    const Mat2 top = dx.yrho + dy.rhox + dr.xy + comm(Ap[0], s.yrho) + comm(Ap[1], s.rhox) + comm(Ap[2], s.xy);
    return hodge_top(p) * top;
}

GaugeSpinor dirac(const OneFormField& A, const GaugeSpinorField& nu, const Point& p, const FDScheme& fd) {
    const auto w = spin_connection(p);
    const OneForm Ap = A(p);
    const GaugeSpinor v = nu(p);
    GaugeSpinor r;
    for (int i = 0; i < 3; ++i) {
        const GaugeSpinor nab = partial(nu, p, i, fd) + w[i] * v + comm(Ap[i], v);
        r = r + (-I_unit * p.rho) * (sigma(i + 1) * nab);
    }
    return r;
}

}  // namespace hm
