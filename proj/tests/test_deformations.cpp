#include <cmath>
#include <random>

#include "doctest.h"
#include "hypermono/deformations.hpp"

using namespace hm;

namespace {

bool close(const Mat2& a, const Mat2& b, double eps = 1e-14) { return (a - b).max_abs() < eps; }

std::vector<Point> points(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5), r(0.3, 2.5);
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) out.push_back({u(rng), u(rng), r(rng)});
    return out;
}

FDScheme fd_at(const Point& p) { return {1e-4 * std::max(1.0, p.rho), 2}; }

Deformation pure_gauge(const FieldConfig& cfg, const ScalarField& chi_f, const OneFormField& dchi) {
    Deformation d;
    d.a = [cfg, chi_f, dchi](const Point& p) {
        const OneForm A = cfg.A(p), g = dchi(p);
        const Mat2 c = chi_f(p);
        return OneForm{g[0] + comm(A[0], c), g[1] + comm(A[1], c), g[2] + comm(A[2], c)};
    };
    d.phi = [cfg, chi_f](const Point& p) { return comm(cfg.Phi(p), chi_f(p)); };
    return d;
}

}  // namespace

TEST_CASE("killing spinor pairing is one") {
    const KillingSpinorBasis k = killing_spinors();
    for (const Point& p : points(100, 1)) CHECK(std::abs(pair(k.psi1(p), k.psi2(p)) - 1.0) < 1e-12);
}

TEST_CASE("killing spinor residuals") {
    const KillingSpinorBasis m = killing_spinors(), pl = killing_spinors_plus();
    for (const Point& p : points(10, 2)) {
        CHECK(killing_spinor_residual(m.psi1, -1, p, fd_at(p)) < 1e-5);
        CHECK(killing_spinor_residual(m.psi2, -1, p, fd_at(p)) < 1e-5);
        CHECK(killing_spinor_residual(pl.psi1, +1, p, fd_at(p)) < 1e-5);
        CHECK(killing_spinor_residual(pl.psi2, +1, p, fd_at(p)) < 1e-5);
    }
    CHECK(killing_spinor_residual(m.psi2, +1, {0.3, 0.2, 1.0}, {1e-4, 2}) > 0.1);
}

TEST_CASE("eigenspinors at the centre") {
    const FieldConfig cfg = one_monopole();
    const auto [nu1, nu2] = eigenspinors(cfg);
    const Point o{0.0, 0.0, 1.0};
    const GaugeSpinor v = nu1.nu(o);
    CHECK(close(v.v1, 0.5 * sigma3()));
    CHECK(close(v.v2, 0.5 * (sigma1() + I_unit * sigma2())));
    CHECK(std::abs(pair(nu1.nu(o), nu2.nu(o)).trace() + 1.5) < 1e-14);
}

TEST_CASE("eigenspinor pairing profile") {
    const FieldConfig cfg = one_monopole();
    const auto [nu1, nu2] = eigenspinors(cfg);
    for (const Point& p : points(20, 3)) {
        const double f = profile_f(cfg, p);
        CHECK(std::abs(pair(nu1.nu(p), nu2.nu(p)).trace() + 6.0 * std::pow(p.rho, 4) * f * f) < 1e-12);
        for (int a = 1; a <= 2; ++a)
            CHECK(((a == 1 ? nu1 : nu2).nu(p) - eigenspinor_clifford(cfg, a, p)).max_abs() < 1e-10);
    }
}

TEST_CASE("dirac eigen residual") {
    const FieldConfig cfg = one_monopole();
    const auto [nu1, nu2] = eigenspinors(cfg);
    for (const Point& p : points(10, 4)) {
        CHECK(dirac_eigen_residual(cfg, nu1, p, fd_at(p)) < 1e-5);
        CHECK(dirac_eigen_residual(cfg, nu2, p, fd_at(p)) < 1e-5);
    }
}

TEST_CASE("tangent vectors solve the linear equations") {
    const FieldConfig cfg = one_monopole();
    for (int mu = 0; mu < 4; ++mu) {
        const Deformation d = tangent_vector(cfg, mu);
        for (const Point& p : points(10, 5)) {
            CHECK(lin_bogomolny_residual(cfg, d, p, fd_at(p)) < 1e-6);
            CHECK(gauge_fix_residual(cfg, d, -1, p, fd_at(p)) < 1e-6);
            if (mu == 0) CHECK(gauge_fix_residual(cfg, d, +1, p, fd_at(p)) < 1e-6);
        }
    }
}

TEST_CASE("tangent vector at the centre") {
    const FieldConfig cfg = one_monopole();
    const Point o{0.0, 0.0, 1.0};
    const DeformationValue t = tangent_value(cfg, 0, o);
    const OneForm star_f = hodge(field_strength(cfg, o), o);
    for (int i = 0; i < 3; ++i) CHECK(close(t.a[i], star_f[i], 1e-13));
    CHECK(t.phi.max_abs() == 0.0);
    const auto all = tangent_values(cfg, o);
    for (int mu = 0; mu < 4; ++mu) CHECK((all[mu] - tangent_value(cfg, mu, o)).max_abs() == 0.0);
}

TEST_CASE("tangent vectors factor through the eigenspinors") {
    const FieldConfig cfg = one_monopole();
    const auto [nu1, nu2] = eigenspinors(cfg);
    const KillingSpinorBasis k = killing_spinors();
    for (const Point& p : points(20, 6)) {
        const CoSpinor d1 = dual(k.psi1(p)), d2 = dual(k.psi2(p));
        const GaugeSpinor n1 = nu1.nu(p), n2 = nu2.nu(p);
        const SpinGaugeMat rhs3 = I_unit * (tensor(n1, d2) + tensor(n2, d1));
        CHECK((tangent_spinor_form(cfg, 3, p) - rhs3).max_abs() < 1e-10);
        const SpinGaugeMat rhs0 = tensor(n1, d2) - tensor(n2, d1);
        CHECK((cl(tangent_value(cfg, 0, p), p) - rhs0).max_abs() < 1e-10);
    }
}

TEST_CASE("gauge generators") {
    const Point o{0.0, 0.0, 1.0};
    CHECK(close(chi(1, o), 0.5 * I_unit * sigma1()));
    CHECK(close(chi(2, o), 0.5 * I_unit * sigma2()));
    CHECK(close(chi(3, o, ChiForm::bare), 0.5 * I_unit * sigma3()));
    CHECK_THROWS_AS(chi(4, o), DomainError);
    const FieldConfig cfg = one_monopole();
    const Point p{0.4, -0.6, 1.3};
    CHECK(close(chi(3, p, ChiForm::printed) - chi(3, p, ChiForm::framed), 2.0 * cfg.Phi(p), 1e-14));
    for (int j = 1; j <= 3; ++j) {
        const OneForm fd{partial([j](const Point& q) { return chi(j, q); }, p, 0, {1e-5, 4}),
                         partial([j](const Point& q) { return chi(j, q); }, p, 1, {1e-5, 4}),
                         partial([j](const Point& q) { return chi(j, q); }, p, 2, {1e-5, 4})};
        CHECK(max_abs(fd - chi_partials(j, p)) < 1e-9);
    }
}

TEST_CASE("pure gauge modes") {
    const FieldConfig cfg = one_monopole();
    const ScalarField c = [](const Point& p) {
        return (I_unit / (1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho)) * sigma3();
    };
    const OneFormField dc = [c](const Point& p) {
        return OneForm{partial(c, p, 0, {1e-5, 4}), partial(c, p, 1, {1e-5, 4}), partial(c, p, 2, {1e-5, 4})};
    };
    const Deformation g = pure_gauge(cfg, c, dc);
    const Point p{0.3, 0.5, 0.9};
    CHECK(lin_bogomolny_residual(cfg, g, p, fd_at(p)) < 1e-6);
    CHECK(gauge_fix_residual(cfg, g, -1, p, fd_at(p)) > 1e-3);

    Deformation junk;
    junk.a = [](const Point& p) { return OneForm{p.x * sigma1(), Mat2::zero(), I_unit * p.rho * sigma2()}; };
    junk.phi = [](const Point& p) { return p.y * I_unit * sigma3(); };
    CHECK(lin_bogomolny_residual(cfg, junk, p, fd_at(p)) > 1e-2);
}

TEST_CASE("boost modes") {
    const FieldConfig cfg = one_monopole();
    const KillingSpinorBasis k = killing_spinors();
    const auto [nu1, nu2] = eigenspinors(cfg);
    for (const Point& p : points(20, 7)) {
        const DeformationValue y = contract(killing_field(KillingKind::Y1, p), field_strength(cfg, p),
                                            higgs_derivative(cfg, p));
        CHECK((y - y1_transcription(p)).max_abs() < 1e-10);
        // adding the gauge generator lands on the spinor form
        const SpinGaugeMat rhs = I_unit * (tensor(nu2.nu(p), dual(k.psi2(p))) - tensor(nu1.nu(p), dual(k.psi1(p))));
        CHECK((cl(y + I_unit * chi_mode(1, p), p) - rhs).max_abs() < 1e-10);
    }
}

TEST_CASE("pluricomplex structure") {
    const Mat2 I = Mat2::identity();
    const Point p2{0.0, 0.0, 2.0};
    DeformationValue d{{I, Mat2::zero(), Mat2::zero()}, Mat2::zero()};
    const DeformationValue j1 = pluricomplex_J(d, {0.5, 0.5, 0.7});
    CHECK(j1.a[0].max_abs() == 0.0);
    CHECK(close(j1.a[1], I));

    const DeformationValue v{{1.0 * I, 2.0 * I, 3.0 * I}, 4.0 * I};
    const DeformationValue jj = pluricomplex_J(pluricomplex_J(v, p2), p2);
    CHECK((jj + v).max_abs() < 1e-15);

    const DeformationValue j4 = pluricomplex_J({{}, I}, p2);
    CHECK(close(j4.a[2], -0.5 * I));
    CHECK(j4.phi.max_abs() == 0.0);
}

TEST_CASE("real deformations reconstruct from one spinor") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto su2 = [&] { return I_unit * (u(rng) * sigma1() + u(rng) * sigma2() + u(rng) * sigma3()); };
    for (const Point& p : points(20, 8)) {
        const DeformationValue d{{su2(), su2(), su2()}, su2()};
        CHECK((real_tangent_reconstruction(d, p) - cl(d, p)).max_abs() < 1e-10);
    }
}

TEST_CASE("lifted killing spinors stay bounded") {
    for (double r : {1e-2, 1e-4})
        for (int a = 1; a <= 2; ++a) {
            const Spinor s = lifted_killing_spinor(a, {0.0, 0.0, r}, 0.3);
            CHECK(std::hypot(std::abs(s.s1), std::abs(s.s2)) < 2.0);
        }
}
