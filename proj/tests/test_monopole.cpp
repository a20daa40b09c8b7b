#include <cmath>
#include <random>

#include "doctest.h"
#include "hypermono/monopole.hpp"

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

}  // namespace

TEST_CASE("fields at the centre") {
    const FieldConfig cfg = one_monopole();
    const Point o{0.0, 0.0, 1.0};
    CHECK(cfg.Phi(o).max_abs() < 1e-15);
    const OneForm A = cfg.A(o);
    CHECK(close(A[0], 0.5 * I_unit * sigma2()));
    CHECK(close(A[1], -0.5 * I_unit * sigma1()));
    CHECK(A[2].max_abs() < 1e-15);
    CHECK(profile_f(cfg, o) == doctest::Approx(0.5));
    CHECK(close(field_strength(cfg, o).xy, 0.5 * I_unit * sigma3()));
    CHECK(energy_density(cfg, o) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("su2 valued") {
    const FieldConfig cfg = one_monopole(0.2, -0.4, 1.3);
    for (const Point& p : points(100, 5)) {
        const Mat2 phi = cfg.Phi(p);
        CHECK(is_antihermitian(phi));
        CHECK(is_traceless(phi));
        for (const Mat2& a : cfg.A(p)) {
            CHECK(is_antihermitian(a));
            CHECK(is_traceless(a));
        }
    }
}

TEST_CASE("higgs eigenvalues at the boundary") {
    const FieldConfig cfg = one_monopole();
    const double d1 = std::abs(su2_norm(cfg.Phi({0.0, 0.0, 1e-2})) - 0.5);
    const double d2 = std::abs(su2_norm(cfg.Phi({0.0, 0.0, 1e-3})) - 0.5);
    CHECK(d1 < 1e-3);
    CHECK(d2 < d1);
    // deviation falls by two decades per decade in rho
    CHECK(d2 / d1 == doctest::Approx(1e-2).epsilon(0.05));
}

TEST_CASE("profile positive, energy density peaks at the centre") {
    const FieldConfig cfg = one_monopole();
    const double ec = energy_density(cfg, {0.0, 0.0, 1.0});
    for (const Point& p : points(200, 9)) {
        CHECK(profile_f(cfg, p) >= 0.0);
        CHECK(energy_density(cfg, p) <= ec);
    }
    // f itself grows towards the boundary
    CHECK(profile_f(cfg, {0.0, 0.0, 1e-3}) > 1.9);
}

TEST_CASE("translation covariance of the profile") {
    const FieldConfig a = one_monopole(), b = one_monopole(0.7, -1.1);
    for (const Point& p : points(20, 2)) CHECK(profile_f(a, p) == profile_f(b, {p.x + 0.7, p.y - 1.1, p.rho}));
}

TEST_CASE("closed form curvature matches finite differences") {
    const FieldConfig cfg = one_monopole();
    double worst = 0.0;
    for (const Point& p : points(20, 4))
        worst = std::max(worst, (field_strength(cfg, p) - field_strength_fd(cfg, p, {1e-4 * std::max(1.0, p.rho), 2})).max_abs());
    CHECK(worst < 1e-6);
}

TEST_CASE("analytic higgs derivative matches finite differences") {
    const FieldConfig cfg = one_monopole(0.3, 0.1, 0.8);
    for (const Point& p : points(20, 6)) {
        const OneForm d = higgs_derivative(cfg, p) - higgs_derivative_fd(cfg, p, {1e-4, 2});
        CHECK(max_abs(d) < 1e-6);
    }
}

TEST_CASE("bogomolny residual") {
    const FieldConfig cfg = one_monopole();
    CHECK(bogomolny_residual(cfg, {0.3, -0.2, 0.8}, {1e-4, 2}) < 1e-6);
    CHECK(bogomolny_residual(zero_config(), {0.3, -0.2, 0.8}, {1e-4, 2}) == 0.0);

    FieldConfig bent = cfg;
    bent.Phi = [phi = cfg.Phi](const Point& p) { return phi(p) + 0.01 * I_unit * sigma3(); };
    bent.dPhi = nullptr;
    CHECK(bogomolny_residual(bent, {0.3, -0.2, 0.8}, {1e-4, 2}) > 1e-3);

    const Point p{0.5, 0.4, 1.2};
    const double r1 = bogomolny_residual(cfg, p, {1e-3, 2});
    const double r2 = bogomolny_residual(cfg, p, {5e-4, 2});
    const double r3 = bogomolny_residual(cfg, p, {2.5e-4, 2});
    CHECK(std::log2(r1 / r2) > 1.7);
    CHECK(std::log2(r2 / r3) > 1.7);
}

TEST_CASE("energy density agrees with the bps form") {
    const FieldConfig cfg = one_monopole();
    for (const Point& p : points(50, 8)) {
        const double e = energy_density(cfg, p);
        CHECK(e >= 0.0);
        CHECK(e == doctest::Approx(energy_density_bps(cfg, p)).epsilon(1e-10));
        const double f = profile_f(cfg, p);
        CHECK(e == doctest::Approx(3.0 * std::pow(p.rho, 4) * f * f).epsilon(1e-10));
    }
}

TEST_CASE("higgs gauge transform") {
    const FieldConfig cfg = one_monopole();
    const Connection c0 = connection_of(cfg), c = higgs_gauge_transform(cfg, 0.0);
    const Point p{0.2, 0.3, 0.7};
    for (int i = 0; i < 3; ++i) CHECK(close(c.A(p)[i], c0.A(p)[i], 1e-13));
    CHECK(close(higgs_exp(cfg, 0.0, p), Mat2::identity()));

    // curvature of the transformed connection is the conjugated curvature, checked by finite differences
    const Connection s = higgs_gauge_transform(cfg, 0.37);
    FieldConfig probe = cfg;
    probe.A = s.A;
    for (const Point& q : points(10, 12)) {
        const TwoForm d = field_strength_fd(probe, q, {1e-4, 2}) - s.F(q);
        CHECK(d.max_abs() < 1e-6);
    }
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(one_monopole(0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(field_strength(one_monopole(), {0.0, 0.0, -1.0}), DomainError);
}
