#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "hypermono/integrate.hpp"

using namespace hm;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("gauss legendre rule") {
    const GLRule r = gauss_legendre(16);
    REQUIRE(r.nodes.size() == 16);
    double w = 0.0, x4 = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        w += r.weights[i];
        x4 += r.weights[i] * std::pow(r.nodes[i], 4);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x4 == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("zero density") {
    QuadratureSpec q;
    q.nodes_per_axis = 8;
    CHECK(integrate_h3([](const Point&) { return cplx(0.0); }, q) == cplx(0.0));
}

TEST_CASE("energy of the unit monopole") {
    const double e = energy(one_monopole(), quadrature_for(one_monopole(), 64));
    CHECK(std::abs(e - pi) / pi < 1e-4);
}

TEST_CASE("energy is invariant under moving the centre") {
    for (const FieldConfig& cfg : {one_monopole(0.0, 0.0, 0.5), one_monopole(0.0, 0.0, 2.0), one_monopole(1.5, -0.5, 1.0)}) {
        const double e = energy(cfg, quadrature_for(cfg, 48));
        CHECK(std::abs(e - pi) / pi < 1e-4);
    }
}

TEST_CASE("explicit metric density") {
    const Density d = [](const Point& p) {
        const double s = p.x * p.x + p.y * p.y + p.rho * p.rho + 1.0;
        return cplx(12.0 * std::pow(p.rho, 4) / std::pow(s, 4));
    };
    QuadratureSpec q;
    q.nodes_per_axis = 48;
    CHECK(std::abs(integrate_h3(d, q).real() - pi) / pi < 1e-4);
}

TEST_CASE("omega pairing") {
    const FieldConfig cfg = one_monopole();
    const auto [nu1, nu2] = eigenspinors(cfg);
    const QuadratureSpec q = quadrature_for(cfg, 48);
    CHECK(std::abs(omega_pair(nu1, nu2, q) - pi) / pi < 1e-4);
    CHECK(std::abs(omega_pair(nu1, nu1, q)) < 1e-10);

    const FieldConfig moved = one_monopole(0.5, -0.3, 2.0);
    const auto [m1, m2] = eigenspinors(moved);
    CHECK(std::abs(omega_pair(m1, m2, quadrature_for(moved, 48)) - pi) / pi < 1e-4);
}

TEST_CASE("non-finite density names the node") {
    QuadratureSpec q;
    q.nodes_per_axis = 8;
    const Density bad = [](const Point& p) { return p.x > 0.0 && p.rho > 1.0 ? cplx(NAN) : cplx(1.0); };
    CHECK_THROWS_WITH_AS(integrate_h3(bad, q), doctest::Contains("node"), QuadratureError);
    q.nodes_per_axis = 4;
    CHECK_THROWS_AS(validate(q), DomainError);
}

TEST_CASE("summation is independent of thread count") {
    const FieldConfig cfg = one_monopole(0.1, 0.2, 1.3);
    QuadratureSpec q = quadrature_for(cfg, 24);
    const Density d = [&](const Point& p) { return cplx(energy_density(cfg, p), std::sin(p.x * p.rho)); };
    q.threads = 1;
    const cplx a = integrate_h3(d, q);
    for (int t : {2, 3, 4, 7}) {
        q.threads = t;
        const cplx b = integrate_h3(d, q);
        CHECK(std::memcmp(&a, &b, sizeof a) == 0);
    }
}

TEST_CASE("chern simons of a connection with itself") {
    const FieldConfig cfg = one_monopole();
    const Connection A = connection_of(cfg);
    CHECK(std::abs(chern_simons(A, A, quadrature_for(cfg, 24))) < 1e-12);
}

TEST_CASE("horosphere boundary term shrinks quadratically") {
    const FieldConfig cfg = one_monopole();
    const ChernSimonsResult r =
        chern_simons_detail(connection_of(cfg), higgs_gauge_transform(cfg, 0.1), quadrature_for(cfg, 24));
    REQUIRE(r.horosphere_value.size() >= 3);
    CHECK(r.converged);
    CHECK(r.monotone);
    CHECK(r.horosphere_value[0] / r.horosphere_value[1] == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("index polynomial") {
    const IndexPolynomial a = equivariant_index(1, 1);
    CHECK(a.coefficients == std::map<int, long long>{{-1, 2}, {1, 2}});
    CHECK(a.dim_plus() == 2);
    CHECK(a.dim_minus() == 2);
    CHECK(a.to_string() == "2γ⁻¹ + 2γ");

    const IndexPolynomial b = equivariant_index(2, 2);
    CHECK(b.coefficients == std::map<int, long long>{{-3, 4}, {-1, 4}, {1, 4}, {3, 4}});
    CHECK(b.palindromic());

    const IndexPolynomial c = equivariant_index(3, 1);
    CHECK(c.coefficients == std::map<int, long long>{{-1, 6}, {1, 6}});

    CHECK(equivariant_index(1, 3).coefficients.size() == 6);
    CHECK_THROWS_AS(equivariant_index(0, 1), DomainError);
    CHECK_THROWS_AS(equivariant_index(1, 0), DomainError);
}

TEST_CASE("thread count resolution") {
    CHECK(resolve_threads(3) == 3);
    setenv("HYPERMONO_THREADS", "2", 1);
    CHECK(resolve_threads(0) == 2);
    unsetenv("HYPERMONO_THREADS");
    CHECK(resolve_threads(0) >= 1);
}
