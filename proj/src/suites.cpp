#include "hypermono/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace hm {

std::vector<Point> sample_points(int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> xy(-1.5, 1.5), rho(0.3, 2.5);
    std::vector<Point> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double x = xy(gen), y = xy(gen), r = rho(gen);
        pts.push_back({x, y, r});
    }
    return pts;
}

double convergence_order(const std::vector<double>& h, const std::vector<double>& residual) {
    const size_t n = std::min(h.size(), residual.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double lx = std::log(h[i]), ly = std::log(std::max(residual[i], 1e-300));
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

using Residual = std::function<double(const Point&, const FDScheme&)>;
using Results = std::vector<CheckResult>;

FDScheme scaled(const Point& p, double h) { return {h * std::max(1.0, p.rho), 2}; }

void add_family(Results& out, const std::string& name, const Residual& r, const std::vector<Point>& pts,
                const VerifyOptions& opt) {
    std::vector<double> hs, worst;
    for (double k : {8.0, 4.0, 2.0, 1.0}) {
        const double h = k * opt.h;
        double m = 0.0;
        for (const auto& p : pts) m = std::max(m, r(p, scaled(p, h)));
        hs.push_back(h);
        worst.push_back(m);
    }
    out.push_back(check_at_most(name + " residual", worst.back(), opt.residual_tol));
    out.push_back(check_at_least(name + " fd order", convergence_order(hs, worst), opt.min_order));
}

template <class F>
double max_over(const std::vector<Point>& pts, F&& f) {
    double m = 0.0;
    for (const auto& p : pts) m = std::max(m, f(p));
    return m;
}

Spinor random_spinor(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    return {cplx(n(g), n(g)), cplx(n(g), n(g))};
}

Mat2 random_mat(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    return {cplx(n(g), n(g)), cplx(n(g), n(g)), cplx(n(g), n(g)), cplx(n(g), n(g))};
}

Mat2 random_su2(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    return I_unit * (n(g) * sigma1() + n(g) * sigma2() + n(g) * sigma3());
}

GaugeSpinor random_gauge_spinor(std::mt19937_64& g) { return {random_mat(g), random_mat(g)}; }

SpinGaugeMat random_block(std::mt19937_64& g) {
    SpinGaugeMat b;
    for (auto& row : b.b)
        for (auto& e : row) e = random_mat(g);
    return b;
}

DeformationValue random_deformation(std::mt19937_64& g, bool real) {
    DeformationValue d;
    for (auto& a : d.a) a = real ? random_su2(g) : random_mat(g);
    d.phi = real ? random_su2(g) : random_mat(g);
    return d;
}

double roundtrip_error(std::mt19937_64& g, const Point& p) {
    const KillingSpinorBasis k = killing_spinors();
    const Spinor s1 = k.psi1(p), s2 = k.psi2(p);
    const SpinGaugeMat b = random_block(g);
    auto [n1, n2] = decompose(b, s1, s2);
    const double e1 = (tensor(n1, dual(s1)) + tensor(n2, dual(s2)) - b).max_abs() / std::max(1.0, b.max_abs());
    const GaugeSpinor v1 = random_gauge_spinor(g), v2 = random_gauge_spinor(g);
    auto [w1, w2] = decompose(tensor(v1, dual(s1)) + tensor(v2, dual(s2)), s1, s2);
    const double e2 = std::max((w1 - v1).max_abs(), (w2 - v2).max_abs()) / std::max({1.0, v1.max_abs(), v2.max_abs()});
    return std::max(e1, e2);
}

// ---------------------------------------------------------------------------

Results algebra_suite(const VerifyOptions& opt) {
    Results out;
    std::mt19937_64 g(opt.seed);
    const auto pts = sample_points(opt.points, opt.seed);

    double pauli = 0.0;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            Mat2 rhs = (i == j) ? Mat2::identity() : Mat2::zero();
            for (int k = 1; k <= 3; ++k) {
                const int e = (i - j) * (j - k) * (k - i) / 2;  // Levi-Civita symbol
                if (e != 0) rhs += (I_unit * double(e)) * sigma(k);
            }
            pauli = std::max(pauli, (sigma(i) * sigma(j) - rhs).max_abs());
        }
    }
    out.push_back(check_at_most("pauli product table", pauli, eps_alg));

    double anti = 0.0, dual_err = 0.0, conj_err = 0.0, compat = 0.0;
    for (int n = 0; n < std::max(opt.points, 10); ++n) {
        const Spinor s = random_spinor(g), t = random_spinor(g);
        anti = std::max(anti, std::abs(pair(s, t) + pair(t, s)));
        dual_err = std::max(dual_err, std::abs(dual(s)(t) - pair(s, t)));
        conj_err = std::max(conj_err, (conj_spinor(conj_spinor(s)) + s).max_abs());
        std::normal_distribution<double> nd;
        const Point p = pts[n % pts.size()];
        const Mat2 v = cl_scalar(nd(g), nd(g), nd(g), 0.0, p);
        compat = std::max(compat, std::abs(pair(s, v * t) + pair(v * s, t)));
    }
    out.push_back(check_at_most("pairing antisymmetry", anti, eps_alg));
    out.push_back(check_at_most("dual evaluates the pairing", dual_err, eps_alg));
    out.push_back(check_at_most("quaternionic structure squares to -1", conj_err, eps_alg));
    out.push_back(check_at_most("pairing compatible with Clifford action", compat, 1e-10));

    const Point unit{0.0, 0.0, 1.0};
    const Mat2 ex = cl_scalar(1.0, 0.0, 0.0, 0.0, unit), ey = cl_scalar(0.0, 1.0, 0.0, 0.0, unit),
               er = cl_scalar(0.0, 0.0, 1.0, 0.0, unit);
    out.push_back(check_at_most("volume form acts as identity", (-(ex * ey * er) - Mat2::identity()).max_abs(), eps_alg));
    out.push_back(check_at_most("cl(dx/rho) is -i sigma_1", (ex + I_unit * sigma1()).max_abs(), eps_alg));

    double ident = 0.0, rt = 0.0, tr = 0.0;
    const KillingSpinorBasis k = killing_spinors();
    for (const auto& p : pts) {
        const Spinor s1 = k.psi1(p), s2 = k.psi2(p);
        const SpinGaugeMat id = tensor(s2, dual(s1)) - tensor(s1, dual(s2));
        SpinGaugeMat one;
        one.b[0][0] = one.b[1][1] = Mat2::identity();
        ident = std::max(ident, (id - one).max_abs());
        rt = std::max(rt, roundtrip_error(g, p));
        const DeformationValue d = random_deformation(g, false);
        auto [n1, n2] = decompose(cl(d, p), s1, s2);
        const Mat2 tr_s = trace_spin(tensor(n1, dual(s1))) + trace_spin(tensor(n2, dual(s2)));
        tr = std::max(tr, (tr_s - 2.0 * d.phi).max_abs());
    }
    out.push_back(check_at_most("Killing spinor tensor gives identity", ident, opt.identity_tol));
    out.push_back(check_at_most("decompose/tensor roundtrip", rt, 1e-12));
    out.push_back(check_at_most("spin trace recovers 2 phi", tr, opt.identity_tol));
    return out;
}

Results geometry_suite(const VerifyOptions& opt) {
    Results out;
    const auto pts = sample_points(opt.points, opt.seed);
    for (KillingKind kind : all_killing_kinds)
        add_family(out, "Killing field " + to_string(kind),
                   [kind](const Point& p, const FDScheme& fd) { return killing_residual(kind, p, fd); }, pts, opt);

    const KillingKind X[3] = {KillingKind::X1, KillingKind::X2, KillingKind::X3};
    const KillingKind Y[3] = {KillingKind::Y1, KillingKind::Y2, KillingKind::Y3};
    double brackets = 0.0, zmetric = 0.0;
    for (const auto& p : pts) {
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            brackets = std::max(brackets, (lie_bracket(X[i], X[j], p) + killing_field(X[k], p)).max_abs());
            brackets = std::max(brackets, (lie_bracket(Y[i], Y[j], p) - killing_field(X[k], p)).max_abs());
        }
        const KillingKind Z[3] = {KillingKind::Z1, KillingKind::Z2, KillingKind::Z3};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                zmetric = std::max(zmetric, std::abs(metric_pair(killing_field(Z[i], p), killing_field(Z[j], p), p) -
                                                     cplx(i == j ? 1.0 : 0.0)));
    }
    out.push_back(check_at_most("Killing field commutators", brackets, 1e-8));
    out.push_back(check_at_most("g(Z_j, Z_k) = delta_jk", zmetric, opt.identity_tol));

    double hodge_err = 0.0;
    std::mt19937_64 g(opt.seed + 1);
    for (const auto& p : pts) {
        const OneForm a{random_mat(g), random_mat(g), random_mat(g)};
        hodge_err = std::max(hodge_err, max_abs(hodge(hodge(a, p), p) - a));
    }
    out.push_back(check_at_most("Hodge star squares to identity on one-forms", hodge_err, eps_alg));

    const KillingSpinorBasis ks = killing_spinors();
    for (int alpha = 1; alpha <= 2; ++alpha) {
        const SpinorField psi = alpha == 1 ? ks.psi1 : ks.psi2;
        add_family(out, "Dirac eigenvalue of psi_" + std::to_string(alpha),
                   [psi](const Point& p, const FDScheme& fd) {
                       return (dirac(psi, p, fd) - (1.5 * I_unit) * psi(p)).max_abs();
                   },
                   pts, opt);
    }

    const Point p0{0.4, -0.3, 1.0};
    const VectorField stretch = [](const Point& p) { return TangentVec3{p.x, 0.0, 0.0}; };
    out.push_back(check_at_least("non-Killing control x d/dx", killing_residual(stretch, p0, {1e-3, 2}), 0.1));
    return out;
}

Results monopole_suite(const VerifyOptions& opt) {
    Results out;
    const FieldConfig cfg = one_monopole();
    const auto pts = sample_points(opt.points, opt.seed);
    add_family(out, "Bogomolny", [&](const Point& p, const FDScheme& fd) { return bogomolny_residual(cfg, p, fd); },
               pts, opt);
    add_family(out, "curvature by FD curl",
               [&](const Point& p, const FDScheme& fd) {
                   return (field_strength_fd(cfg, p, fd) - field_strength(cfg, p)).max_abs();
               },
               pts, opt);

    const auto many = sample_points(std::max(100, opt.points), opt.seed + 7);
    double su2 = 0.0;
    for (const auto& p : many) {
        for (const Mat2& m : cfg.A(p)) su2 = std::max({su2, std::abs(m.trace()), (m + m.adjoint()).max_abs()});
        const Mat2 phi = cfg.Phi(p);
        su2 = std::max({su2, std::abs(phi.trace()), (phi + phi.adjoint()).max_abs()});
    }
    out.push_back(check_at_most("A and Phi are su(2) valued", su2, eps_alg));

    const double dens = max_over(pts, [&](const Point& p) {
        return std::abs(energy_density(cfg, p) - energy_density_bps(cfg, p)) / std::max(1e-300, energy_density_bps(cfg, p));
    });
    out.push_back(check_at_most("energy density equals 3 rho^4 f^2", dens, opt.identity_tol));

    const FieldConfig moved = one_monopole(0.7, -0.4, 1.0);
    const double iso = max_over(pts, [&](const Point& p) {
        return std::abs(profile_f(moved, {p.x + 0.7, p.y - 0.4, p.rho}) - profile_f(cfg, p));
    });
    out.push_back(check_at_most("translation covariance of f", iso, 1e-15));

    const double dev2 = 0.5 - su2_norm(cfg.Phi({0.0, 0.0, 1e-2}));
    const double dev3 = 0.5 - su2_norm(cfg.Phi({0.0, 0.0, 1e-3}));
    out.push_back(check_at_most("|Phi| -> 1/2 at the boundary, deviation ratio", std::abs(dev3 / dev2), 0.15));

    FieldConfig bent = cfg;
    bent.Phi = [phi = cfg.Phi](const Point& p) { return phi(p) + (0.01 * I_unit) * sigma3(); };
    out.push_back(check_at_least("perturbed Higgs control", bogomolny_residual(bent, {0.3, -0.2, 0.8}, {1e-4, 2}), 1e-3));
    return out;
}

void deformation_residuals(Results& out, const VerifyOptions& opt, bool everything) {
    const FieldConfig cfg = one_monopole();
    const auto pts = sample_points(opt.points, opt.seed);

    const KillingSpinorBasis ks = killing_spinors();
    add_family(out, "Killing spinor psi_1",
               [&](const Point& p, const FDScheme& fd) { return killing_spinor_residual(ks.psi1, -1, p, fd); }, pts, opt);
    add_family(out, "Killing spinor psi_2",
               [&](const Point& p, const FDScheme& fd) { return killing_spinor_residual(ks.psi2, -1, p, fd); }, pts, opt);

    auto [n1, n2] = eigenspinors(cfg);
    add_family(out, "Dirac eigenspinor nu_1",
               [&](const Point& p, const FDScheme& fd) { return dirac_eigen_residual(cfg, n1, p, fd); }, pts, opt);
    add_family(out, "Dirac eigenspinor nu_2",
               [&](const Point& p, const FDScheme& fd) { return dirac_eigen_residual(cfg, n2, p, fd); }, pts, opt);

    for (int mu = 0; mu < 4; ++mu) {
        const Deformation d = tangent_vector(cfg, mu);
        const std::string tag = "mu_" + std::to_string(mu);
        add_family(out, "linearised Bogomolny " + tag,
                   [&](const Point& p, const FDScheme& fd) { return lin_bogomolny_residual(cfg, d, p, fd); }, pts, opt);
        add_family(out, "gauge fixing (-) " + tag,
                   [&](const Point& p, const FDScheme& fd) { return gauge_fix_residual(cfg, d, -1, p, fd); }, pts, opt);
    }
    if (!everything) return;

    const Deformation d0 = tangent_vector(cfg, 0);
    add_family(out, "gauge fixing (+) mu_0",
               [&](const Point& p, const FDScheme& fd) { return gauge_fix_residual(cfg, d0, +1, p, fd); }, pts, opt);
    const Deformation gauge = chi_deformation(3, ChiForm::bare);
    add_family(out, "linearised Bogomolny pure gauge",
               [&](const Point& p, const FDScheme& fd) { return lin_bogomolny_residual(cfg, gauge, p, fd); }, pts, opt);
    const KillingSpinorBasis kp = killing_spinors_plus();
    add_family(out, "Killing spinor conj(psi_1), K+",
               [&](const Point& p, const FDScheme& fd) { return killing_spinor_residual(kp.psi1, +1, p, fd); }, pts, opt);

    const Point p0{0.3, -0.2, 0.8};
    const FDScheme fd0{opt.h, 2};
    out.push_back(check_at_least("gauge fixing (-) control, pure gauge mode", gauge_fix_residual(cfg, gauge, -1, p0, fd0), 1e-3));
    Deformation junk;
    junk.a = [](const Point& p) { return OneForm{p.x * sigma1(), p.y * p.rho * sigma2(), I_unit * sigma3()}; };
    junk.phi = [](const Point& p) { return (p.x * p.rho) * sigma3(); };
    out.push_back(check_at_least("linearised Bogomolny control, non-solution", lin_bogomolny_residual(cfg, junk, p0, fd0), 1e-2));
    const Deformation d1 = tangent_vector(cfg, 1);
    out.push_back(check_at_least("gauge fixing (+) control, mu_1", gauge_fix_residual(cfg, d1, +1, p0, fd0), 1e-3));
}

void deformation_identities(Results& out, const VerifyOptions& opt) {
    const FieldConfig cfg = one_monopole();
    const auto pts = sample_points(std::max(20, opt.points), opt.seed + 3);
    const double tol = opt.identity_tol;

    for (int mu = 0; mu < 4; ++mu) {
        const double e = max_over(pts, [&](const Point& p) {
            return (cl(tangent_value(cfg, mu, p), p) - tangent_spinor_form(cfg, mu, p)).max_abs();
        });
        out.push_back(check_at_most("Clifford factorisation of mu_" + std::to_string(mu), e, tol));
    }

    const KillingKind Y[3] = {KillingKind::Y1, KillingKind::Y2, KillingKind::Y3};
    for (int j = 1; j <= 3; ++j) {
        const double e = max_over(pts, [&](const Point& p) {
            const DeformationValue y = contract(killing_field(Y[j - 1], p), field_strength(cfg, p), higgs_derivative(cfg, p));
            return (cl(y + I_unit * chi_mode(j, p), p) - tangent_spinor_form(cfg, j, p)).max_abs();
        });
        out.push_back(check_at_most("boost plus gauge chi_" + std::to_string(j) + " factorises", e, tol));
    }

    const double y1 = max_over(pts, [&](const Point& p) {
        const DeformationValue y = contract(killing_field(KillingKind::Y1, p), field_strength(cfg, p), higgs_derivative(cfg, p));
        return (y - y1_transcription(p)).max_abs();
    });
    out.push_back(check_at_most("Y_1 contraction matches printed closed form", y1, tol));

    std::mt19937_64 g(opt.seed + 5);
    double rt = 0.0, jj = 0.0, real_rec = 0.0;
    for (const auto& p : pts) {
        rt = std::max(rt, roundtrip_error(g, p));
        const DeformationValue d = random_deformation(g, false);
        jj = std::max(jj, (pluricomplex_J(pluricomplex_J(d, p), p) + d).max_abs());
        const DeformationValue r = random_deformation(g, true);
        real_rec = std::max(real_rec, (real_tangent_reconstruction(r, p) - cl(r, p)).max_abs());
    }
    out.push_back(check_at_most("decompose/tensor roundtrip", rt, tol));
    out.push_back(check_at_most("J squared is -1", jj, tol));
    out.push_back(check_at_most("real tangent vector from nu and psi_1", real_rec, tol));

    const KillingSpinorBasis ks = killing_spinors();
    const auto hundred = sample_points(100, opt.seed + 11);
    const double pr = max_over(hundred, [&](const Point& p) { return std::abs(pair(ks.psi1(p), ks.psi2(p)) - 1.0); });
    out.push_back(check_at_most("pair(psi_1, psi_2) = 1", pr, tol));
}

Results deformation_suite(const VerifyOptions& opt) {
    Results out;
    deformation_residuals(out, opt, true);
    deformation_identities(out, opt);

    const FieldConfig cfg = one_monopole();
    const auto pts = sample_points(std::max(20, opt.points), opt.seed + 3);
    auto [n1, n2] = eigenspinors(cfg);
    const double clr = max_over(pts, [&](const Point& p) {
        return std::max((n1.nu(p) - eigenspinor_clifford(cfg, 1, p)).max_abs(),
                        (n2.nu(p) - eigenspinor_clifford(cfg, 2, p)).max_abs());
    });
    out.push_back(check_at_most("eigenspinors equal cl(F) psi", clr, opt.identity_tol));
    const double tr = max_over(pts, [&](const Point& p) {
        const double f = profile_f(cfg, p), r4 = std::pow(p.rho, 4);
        return std::abs(pair(n1.nu(p), n2.nu(p)).trace() + 6.0 * r4 * f * f);
    });
    out.push_back(check_at_most("Tr(nu_1, nu_2) = -6 rho^4 f^2", tr, opt.identity_tol));

    double lift = 0.0;
    for (double rho : {1e-2, 1e-4})
        for (int a = 1; a <= 2; ++a) lift = std::max(lift, lifted_killing_spinor(a, {0.0, 0.0, rho}, 0.3).max_abs());
    out.push_back(check_at_most("lifted Killing spinors bounded near the fixed plane", lift, 2.0));
    return out;
}

}  // namespace

std::vector<CheckResult> residual_checks(const VerifyOptions& opt) {
    Results out;
    const FieldConfig cfg = one_monopole();
    const auto pts = sample_points(opt.points, opt.seed);
    add_family(out, "Bogomolny", [&](const Point& p, const FDScheme& fd) { return bogomolny_residual(cfg, p, fd); },
               pts, opt);
    deformation_residuals(out, opt, false);
    return out;
}

std::vector<CheckResult> identity_checks(const VerifyOptions& opt) {
    Results out;
    deformation_identities(out, opt);
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "algebra") return algebra_suite(opt);
    if (name == "geometry") return geometry_suite(opt);
    if (name == "monopole") return monopole_suite(opt);
    if (name == "deformations") return deformation_suite(opt);
    if (name == "all") {
        Results out;
        for (const auto& s : suite_names) {
            Results r = run_suite(s, opt);
            for (auto& c : r) c.name = s + ": " + c.name;
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    throw DomainError("unknown suite: " + name);
}

}  // namespace hm
