#include <random>

#include "doctest.h"
#include "hypermono/algebra.hpp"

using namespace hm;

namespace {

bool close(const Mat2& a, const Mat2& b, double eps = 1e-14) { return (a - b).max_abs() < eps; }
bool close(cplx a, cplx b, double eps = 1e-14) { return std::abs(a - b) < eps; }

Mat2 random_mat(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
}

}  // namespace

TEST_CASE("pauli products") {
    const Mat2 I = Mat2::identity();
    for (int i = 1; i <= 3; ++i) {
        CHECK(close(sigma(i) * sigma(i), I));
        CHECK(is_traceless(sigma(i)));
        CHECK(is_antihermitian(I_unit * sigma(i)));
    }
    CHECK(close(sigma1() * sigma2(), I_unit * sigma3()));
    CHECK(close(sigma2() * sigma3(), I_unit * sigma1()));
    CHECK(close(sigma3() * sigma1(), I_unit * sigma2()));
    CHECK_FALSE(is_antihermitian(sigma1()));
    CHECK_FALSE(is_traceless(I));
}

TEST_CASE("symplectic pairing") {
    CHECK(pair(Spinor{1.0, 0.0}, Spinor{0.0, 1.0}) == cplx(1.0));
    CHECK(pair(Spinor{1.0, 0.0}, Spinor{1.0, 0.0}) == cplx(0.0));
    const Spinor s{cplx(0.3, -1.2), cplx(2.0, 0.5)}, t{cplx(-0.7, 0.1), cplx(0.4, 0.9)};
    CHECK(close(pair(s, t), -pair(t, s)));
    CHECK(close(dual(s)(t), pair(s, t)));
    CHECK(close(dual(s)(s), 0.0));
}

TEST_CASE("dual and conjugation") {
    const CoSpinor d1 = dual(Spinor{1.0, 0.0}), d2 = dual(Spinor{0.0, 1.0});
    CHECK(d1.c1 == cplx(0.0));
    CHECK(d1.c2 == cplx(1.0));
    CHECK(d2.c1 == cplx(-1.0));
    CHECK(d2.c2 == cplx(0.0));

    const Spinor c1 = conj_spinor(Spinor{1.0, 0.0}), c2 = conj_spinor(Spinor{0.0, 1.0});
    CHECK(c1.s1 == cplx(0.0));
    CHECK(c1.s2 == cplx(-1.0));
    CHECK(c2.s1 == cplx(1.0));
    CHECK(c2.s2 == cplx(0.0));

    const Spinor s{1.0, cplx(0.0, 2.0)};
    const Spinor cc = conj_spinor(conj_spinor(s));
    CHECK(close(cc.s1, -s.s1));
    CHECK(close(cc.s2, -s.s2));
}

TEST_CASE("clifford images") {
    const Point p{0.4, -1.1, 1.0};
    const SpinGaugeMat id = cl(Mat2::zero(), Mat2::zero(), Mat2::zero(), Mat2::identity(), p);
    CHECK(close(id.b[0][0], Mat2::identity()));
    CHECK(close(id.b[1][1], Mat2::identity()));
    CHECK(id.b[0][1].max_abs() == 0.0);
    CHECK(id.b[1][0].max_abs() == 0.0);

    CHECK(close(cl_scalar(1.0, 0.0, 0.0, 0.0, p), -I_unit * sigma1()));
    CHECK(close(cl_scalar(0.0, 1.0, 0.0, 0.0, p), -I_unit * sigma2()));
    CHECK(close(cl_scalar(0.0, 0.0, 1.0, 0.0, p), -I_unit * sigma3()));

    // unit covectors dx/rho etc. square to -1 at any height
    const Point q{0.2, 0.3, 2.5};
    const double r = 1.0 / q.rho;
    const Mat2 ex = cl_scalar(r, 0.0, 0.0, 0.0, q), ey = cl_scalar(0.0, r, 0.0, 0.0, q),
               er = cl_scalar(0.0, 0.0, r, 0.0, q);
    CHECK(close(ex * ex, -Mat2::identity()));
    CHECK(close(ex * ey + ey * ex, Mat2::zero()));
    // sign of the volume element in this representation
    CHECK(close(ex * ey * er, -Mat2::identity()));
}

TEST_CASE("pairing compatibility with clifford action") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const Point p{u(rng), u(rng), 1.0 + std::abs(u(rng))};
        const Mat2 v = cl_scalar(u(rng), u(rng), u(rng), 0.0, p);
        const Spinor s{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const Spinor t{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        CHECK(close(pair(s, v * t), -pair(v * s, t), 1e-13));
    }
}

TEST_CASE("tensor and decompose") {
    const Spinor psi1{1.0, 0.0}, psi2{0.0, 1.0};
    const SpinGaugeMat idm = tensor(psi2, dual(psi1)) - tensor(psi1, dual(psi2));
    CHECK(close(idm.b[0][0], Mat2::identity()));
    CHECK(close(idm.b[1][1], Mat2::identity()));
    CHECK(idm.b[0][1].max_abs() == 0.0);

    CHECK(tensor(GaugeSpinor{}, dual(psi1)).max_abs() == 0.0);

    SpinGaugeMat b;
    b.b[0][0] = b.b[1][1] = Mat2::identity();
    const auto [nu1, nu2] = decompose(b, psi1, psi2);
    CHECK(close(nu1.v2, Mat2::identity()));
    CHECK(nu1.v1.max_abs() == 0.0);
    CHECK(close(nu2.v1, -Mat2::identity()));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        SpinGaugeMat m;
        for (auto& row : m.b)
            for (auto& e : row) e = random_mat(rng);
        const Spinor a{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const Spinor c{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const auto [n1, n2] = decompose(m, a, c);
        const SpinGaugeMat back = tensor(n1, dual(a)) + tensor(n2, dual(c));
        CHECK((back - m).max_abs() < 1e-12 * std::max(1.0, 1.0 / std::abs(pair(a, c))));

        const GaugeSpinor g1{random_mat(rng), random_mat(rng)}, g2{random_mat(rng), random_mat(rng)};
        const double cond = std::max(1.0, 1.0 / std::abs(pair(a, c)));
        const auto [r1, r2] = decompose(tensor(g1, dual(a)) + tensor(g2, dual(c)), a, c);
        CHECK((r1 - g1).max_abs() < 1e-12 * cond);
        CHECK((r2 - g2).max_abs() < 1e-12 * cond);
    }
    CHECK_THROWS_AS(decompose(b, psi1, psi1), DomainError);
}

TEST_CASE("gauge spinor conjugation squares to minus one") {
    std::mt19937_64 rng(3);
    const GaugeSpinor g{random_mat(rng), random_mat(rng)};
    CHECK((conj_spinor(conj_spinor(g)) + g).max_abs() < 1e-15);
}

TEST_CASE("invalid point") {
    CHECK_THROWS_AS(require_valid(Point{0.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(require_valid(Point{0.0, 0.0, -1.0}), DomainError);
    CHECK_NOTHROW(require_valid(Point{0.0, 0.0, 1e-9}));
}
