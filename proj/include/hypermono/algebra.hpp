#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

namespace hm {

using cplx = std::complex<double>;

inline constexpr double eps_alg = 1e-12;
inline constexpr cplx I_unit{0.0, 1.0};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Point of the upper half-space model, rho > 0.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double rho = 1.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : rho); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : rho); }
};

void require_valid(const Point& p);

struct Mat2 {
    cplx m11{}, m12{}, m21{}, m22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    Mat2& operator*=(cplx s);

    cplx trace() const { return m11 + m22; }
    Mat2 adjoint() const { return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)}; }
    double max_abs() const;
};

Mat2 operator+(Mat2 a, const Mat2& b);
Mat2 operator-(Mat2 a, const Mat2& b);
Mat2 operator-(const Mat2& a);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, Mat2 a);
Mat2 operator*(Mat2 a, cplx s);
Mat2 operator*(double s, Mat2 a);
Mat2 operator/(Mat2 a, cplx s);
inline Mat2 comm(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 sigma(int k);  // k = 1, 2, 3
inline Mat2 sigma1() { return sigma(1); }
inline Mat2 sigma2() { return sigma(2); }
inline Mat2 sigma3() { return sigma(3); }

bool is_traceless(const Mat2& m, double eps = eps_alg);
bool is_antihermitian(const Mat2& m, double eps = eps_alg);

struct Spinor {
    cplx s1{}, s2{};
    double max_abs() const;
};

Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator*(cplx s, const Spinor& a);
Spinor operator*(double s, const Spinor& a);
Spinor operator*(const Mat2& m, const Spinor& a);

/// Row covector acting on spinors.
struct CoSpinor {
    cplx c1{}, c2{};
    cplx operator()(const Spinor& t) const { return c1 * t.s1 + c2 * t.s2; }
};

/// Spinor whose two components are gauge matrices.
struct GaugeSpinor {
    Mat2 v1{}, v2{};
    double max_abs() const;
};

GaugeSpinor operator+(const GaugeSpinor& a, const GaugeSpinor& b);
GaugeSpinor operator-(const GaugeSpinor& a, const GaugeSpinor& b);
GaugeSpinor operator*(cplx s, const GaugeSpinor& a);
GaugeSpinor operator*(double s, const GaugeSpinor& a);
/// Spin matrix acting on the spin index.
GaugeSpinor operator*(const Mat2& spin, const GaugeSpinor& a);
/// Gauge commutator componentwise.
GaugeSpinor comm(const Mat2& g, const GaugeSpinor& a);

/// Endomorphism of spinor (x) gauge in nested 2x2 form; b[a][c] is a gauge matrix.
struct SpinGaugeMat {
    std::array<std::array<Mat2, 2>, 2> b{};
    double max_abs() const;
};

SpinGaugeMat operator+(const SpinGaugeMat& a, const SpinGaugeMat& b);
SpinGaugeMat operator-(const SpinGaugeMat& a, const SpinGaugeMat& b);
SpinGaugeMat operator*(cplx s, const SpinGaugeMat& a);
GaugeSpinor operator*(const SpinGaugeMat& m, const Spinor& s);
GaugeSpinor operator*(const SpinGaugeMat& m, const GaugeSpinor& s);

cplx pair(const Spinor& s, const Spinor& t);
/// Spin pairing of gauge spinors, result still gauge valued.
Mat2 pair(const GaugeSpinor& s, const GaugeSpinor& t);
CoSpinor dual(const Spinor& s);
Spinor conj_spinor(const Spinor& s);
/// Quaternionic structure extended by M -> -M^dagger on the gauge factor.
GaugeSpinor conj_spinor(const GaugeSpinor& s);

SpinGaugeMat cl(const Mat2& a_x, const Mat2& a_y, const Mat2& a_rho, const Mat2& phi, const Point& p);
/// Abelian collapse of cl: scalar coefficients, result acts on the spin index only.
Mat2 cl_scalar(cplx a_x, cplx a_y, cplx a_rho, cplx phi, const Point& p);
/// Clifford image of a two-form F_xy dx^dy + F_yrho dy^drho + F_rhox drho^dx.
SpinGaugeMat cl2(const Mat2& f_xy, const Mat2& f_yrho, const Mat2& f_rhox, const Point& p);

SpinGaugeMat tensor(const GaugeSpinor& nu, const CoSpinor& psi_dual);
SpinGaugeMat tensor(const Spinor& nu, const CoSpinor& psi_dual);
Mat2 trace_spin(const SpinGaugeMat& m);

std::pair<GaugeSpinor, GaugeSpinor> decompose(const SpinGaugeMat& b, const Spinor& psi1, const Spinor& psi2);

}  // namespace hm
