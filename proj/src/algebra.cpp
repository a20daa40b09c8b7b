#include "hypermono/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hm {

void require_valid(const Point& p) {
    if (!(p.rho > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.rho))
        throw DomainError("point outside upper half-space: rho = " + std::to_string(p.rho));
}

Mat2& Mat2::operator+=(const Mat2& o) {
    m11 += o.m11; m12 += o.m12; m21 += o.m21; m22 += o.m22;
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    m11 -= o.m11; m12 -= o.m12; m21 -= o.m21; m22 -= o.m22;
    return *this;
}

Mat2& Mat2::operator*=(cplx s) {
    m11 *= s; m12 *= s; m21 *= s; m22 *= s;
    return *this;
}

double Mat2::max_abs() const {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
Mat2 operator-(const Mat2& a) { return {-a.m11, -a.m12, -a.m21, -a.m22}; }
Mat2 operator*(cplx s, Mat2 a) { return a *= s; }
Mat2 operator*(Mat2 a, cplx s) { return a *= s; }
Mat2 operator*(double s, Mat2 a) { return a *= cplx(s); }
Mat2 operator/(Mat2 a, cplx s) { return a *= (1.0 / s); }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Mat2 sigma(int k) {
    switch (k) {
        case 1: return {0.0, 1.0, 1.0, 0.0};
        case 2: return {0.0, -I_unit, I_unit, 0.0};
        case 3: return {1.0, 0.0, 0.0, -1.0};
        default: throw DomainError("Pauli index out of range: " + std::to_string(k));
    }
}

bool is_traceless(const Mat2& m, double eps) { return std::abs(m.trace()) < eps; }

bool is_antihermitian(const Mat2& m, double eps) { return (m + m.adjoint()).max_abs() < eps; }

double Spinor::max_abs() const { return std::max(std::abs(s1), std::abs(s2)); }

Spinor operator+(const Spinor& a, const Spinor& b) { return {a.s1 + b.s1, a.s2 + b.s2}; }
Spinor operator-(const Spinor& a, const Spinor& b) { return {a.s1 - b.s1, a.s2 - b.s2}; }
Spinor operator*(cplx s, const Spinor& a) { return {s * a.s1, s * a.s2}; }
Spinor operator*(double s, const Spinor& a) { return {s * a.s1, s * a.s2}; }
Spinor operator*(const Mat2& m, const Spinor& a) {
    return {m.m11 * a.s1 + m.m12 * a.s2, m.m21 * a.s1 + m.m22 * a.s2};
}

double GaugeSpinor::max_abs() const { return std::max(v1.max_abs(), v2.max_abs()); }

GaugeSpinor operator+(const GaugeSpinor& a, const GaugeSpinor& b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
GaugeSpinor operator-(const GaugeSpinor& a, const GaugeSpinor& b) { return {a.v1 - b.v1, a.v2 - b.v2}; }
GaugeSpinor operator*(cplx s, const GaugeSpinor& a) { return {s * a.v1, s * a.v2}; }
GaugeSpinor operator*(double s, const GaugeSpinor& a) { return {s * a.v1, s * a.v2}; }
GaugeSpinor operator*(const Mat2& m, const GaugeSpinor& a) {
    return {m.m11 * a.v1 + m.m12 * a.v2, m.m21 * a.v1 + m.m22 * a.v2};
}
GaugeSpinor comm(const Mat2& g, const GaugeSpinor& a) { return {comm(g, a.v1), comm(g, a.v2)}; }

double SpinGaugeMat::max_abs() const {
    double m = 0.0;
    for (const auto& row : b)
        for (const auto& e : row) m = std::max(m, e.max_abs());
    return m;
}

SpinGaugeMat operator+(const SpinGaugeMat& a, const SpinGaugeMat& b) {
    SpinGaugeMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.b[i][j] = a.b[i][j] + b.b[i][j];
    return r;
}

SpinGaugeMat operator-(const SpinGaugeMat& a, const SpinGaugeMat& b) {
    SpinGaugeMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.b[i][j] = a.b[i][j] - b.b[i][j];
    return r;
}

SpinGaugeMat operator*(cplx s, const SpinGaugeMat& a) {
    SpinGaugeMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.b[i][j] = s * a.b[i][j];
    return r;
}

GaugeSpinor operator*(const SpinGaugeMat& m, const Spinor& s) {
    return {s.s1 * m.b[0][0] + s.s2 * m.b[0][1], s.s1 * m.b[1][0] + s.s2 * m.b[1][1]};
}

GaugeSpinor operator*(const SpinGaugeMat& m, const GaugeSpinor& s) {
    return {m.b[0][0] * s.v1 + m.b[0][1] * s.v2, m.b[1][0] * s.v1 + m.b[1][1] * s.v2};
}

cplx pair(const Spinor& s, const Spinor& t) { return s.s1 * t.s2 - s.s2 * t.s1; }

Mat2 pair(const GaugeSpinor& s, const GaugeSpinor& t) { return s.v1 * t.v2 - s.v2 * t.v1; }

CoSpinor dual(const Spinor& s) { return {-s.s2, s.s1}; }

Spinor conj_spinor(const Spinor& s) { return {std::conj(s.s2), -std::conj(s.s1)}; }

GaugeSpinor conj_spinor(const GaugeSpinor& s) { return {-s.v2.adjoint(), s.v1.adjoint()}; }

SpinGaugeMat cl(const Mat2& a_x, const Mat2& a_y, const Mat2& a_rho, const Mat2& phi, const Point& p) {
    require_valid(p);
    const cplx mir = -I_unit * p.rho;
    SpinGaugeMat r;
    r.b[0][0] = phi + mir * a_rho;
    r.b[0][1] = mir * (a_x - I_unit * a_y);
    r.b[1][0] = mir * (a_x + I_unit * a_y);
    r.b[1][1] = phi - mir * a_rho;
    return r;
}

Mat2 cl_scalar(cplx a_x, cplx a_y, cplx a_rho, cplx phi, const Point& p) {
    require_valid(p);
    const cplx mir = -I_unit * p.rho;
    return {phi + mir * a_rho, mir * (a_x - I_unit * a_y), mir * (a_x + I_unit * a_y), phi - mir * a_rho};
}

SpinGaugeMat cl2(const Mat2& f_xy, const Mat2& f_yrho, const Mat2& f_rhox, const Point& p) {
    require_valid(p);
    const cplx c = -I_unit * p.rho * p.rho;
    SpinGaugeMat r;
    r.b[0][0] = c * f_xy;
    r.b[0][1] = c * (f_yrho - I_unit * f_rhox);
    r.b[1][0] = c * (f_yrho + I_unit * f_rhox);
    r.b[1][1] = -c * f_xy;
    return r;
}

SpinGaugeMat tensor(const GaugeSpinor& nu, const CoSpinor& d) {
    SpinGaugeMat r;
    r.b[0][0] = d.c1 * nu.v1;
    r.b[0][1] = d.c2 * nu.v1;
    r.b[1][0] = d.c1 * nu.v2;
    r.b[1][1] = d.c2 * nu.v2;
    return r;
}

SpinGaugeMat tensor(const Spinor& nu, const CoSpinor& d) {
    return tensor(GaugeSpinor{nu.s1 * Mat2::identity(), nu.s2 * Mat2::identity()}, d);
}

Mat2 trace_spin(const SpinGaugeMat& m) { return m.b[0][0] + m.b[1][1]; }

std::pair<GaugeSpinor, GaugeSpinor> decompose(const SpinGaugeMat& b, const Spinor& psi1, const Spinor& psi2) {
    const cplx w = pair(psi1, psi2);
    if (std::abs(w) < eps_alg) throw DomainError("degenerate spinor pair in decompose");
    const cplx inv = 1.0 / w;
    return {inv * (b * psi2), -inv * (b * psi1)};
}

}  // namespace hm
