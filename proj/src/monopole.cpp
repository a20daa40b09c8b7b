#include "hypermono/monopole.hpp"

#include <cmath>
#include <memory>

namespace hm {

namespace {

struct Center {
    double x0, y0, lambda;

    double denom(const Point& p) const {
        const double X = p.x - x0, Y = p.y - y0;
        return lambda * lambda + X * X + Y * Y + p.rho * p.rho;
    }
};

void require_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("monopole scale lambda must be positive");
}

}  // namespace

FieldConfig one_monopole(double x0, double y0, double lambda) {
    require_lambda(lambda);
    const Center c{x0, y0, lambda};
    FieldConfig cfg;
    cfg.n = 1;
    cfg.p_mass = 0.5;
    cfg.x0 = x0;
    cfg.y0 = y0;
    cfg.lambda = lambda;

    cfg.A = [c](const Point& p) -> OneForm {
        const double X = p.x - c.x0, Y = p.y - c.y0, r = p.rho;
        const cplx k = I_unit / c.denom(p);
        return {k * (r * sigma2() - Y * sigma3()), k * (X * sigma3() - r * sigma1()), k * (Y * sigma1() - X * sigma2())};
    };

    cfg.Phi = [c](const Point& p) -> Mat2 {
        const double X = p.x - c.x0, Y = p.y - c.y0, r = p.rho;
        const Mat2 m = r * sigma3() + X * sigma1() + Y * sigma2();
        return (0.5 * I_unit) * sigma3() - (I_unit * r / c.denom(p)) * m;
    };

    cfg.F = [c](const Point& p) -> TwoForm {
        const double D = c.denom(p);
        const cplx f = I_unit * (2.0 * c.lambda * c.lambda / (D * D));
        return {f * sigma3(), f * sigma1(), f * sigma2()};
    };

    cfg.dPhi = [c](const Point& p) -> OneForm {
        const double X = p.x - c.x0, Y = p.y - c.y0, r = p.rho;
        const double D = c.denom(p);
        const Mat2 m = r * sigma3() + X * sigma1() + Y * sigma2();
        const double g = r / D;
        const double dg[3] = {-2.0 * r * X / (D * D), -2.0 * r * Y / (D * D), (D - 2.0 * r * r) / (D * D)};
        OneForm out;
        for (int i = 0; i < 3; ++i) out[i] = -I_unit * (dg[i] * m + g * sigma(i + 1));
        return out;
    };
    return cfg;
}

FieldConfig zero_config() {
    FieldConfig cfg;
    cfg.A = [](const Point&) { return OneForm{}; };
    cfg.Phi = [](const Point&) { return Mat2::zero(); };
    cfg.F = [](const Point&) { return TwoForm{}; };
    cfg.dPhi = [](const Point&) { return OneForm{}; };
    return cfg;
}

double profile_f(const FieldConfig& cfg, const Point& p) {
    const double D = Center{cfg.x0, cfg.y0, cfg.lambda}.denom(p);
    return 2.0 * cfg.lambda * cfg.lambda / (D * D);
}

FieldStrength field_strength(const FieldConfig& cfg, const Point& p) {
    require_valid(p);
    if (!cfg.F) throw DomainError("field configuration has no closed-form curvature");
    return cfg.F(p);
}

FieldStrength field_strength_fd(const FieldConfig& cfg, const Point& p, const FDScheme& fd) {
    const OneForm a = cfg.A(p);
    const TwoForm twice = covariant_exterior(cfg.A, cfg.A, p, fd);
    return twice - TwoForm{comm(a[0], a[1]), comm(a[1], a[2]), comm(a[2], a[0])};
}

OneForm higgs_derivative(const FieldConfig& cfg, const Point& p) {
    require_valid(p);
    if (!cfg.dPhi) throw DomainError("field configuration has no closed-form Higgs derivative");
    const OneForm a = cfg.A(p), d = cfg.dPhi(p);
    const Mat2 phi = cfg.Phi(p);
    return {d[0] + comm(a[0], phi), d[1] + comm(a[1], phi), d[2] + comm(a[2], phi)};
}

OneForm higgs_derivative_fd(const FieldConfig& cfg, const Point& p, const FDScheme& fd) {
    return covariant_gradient(cfg.A, cfg.Phi, p, fd);
}

double bogomolny_residual(const FieldConfig& cfg, const Point& p, const FDScheme& fd) {
    const OneForm lhs = higgs_derivative_fd(cfg, p, fd);
    const OneForm rhs = hodge(field_strength(cfg, p), p);
    return max_abs(lhs - rhs);
}

double energy_density(const FieldConfig& cfg, const Point& p) {
    const OneForm d = higgs_derivative(cfg, p);
    const TwoForm F = field_strength(cfg, p);
    const double r2 = p.rho * p.rho;
    cplx higgs = 0.0;
    for (const auto& m : d) higgs += (m * m).trace();
    const cplx curv = (F.xy * F.xy).trace() + (F.yrho * F.yrho).trace() + (F.rhox * F.rhox).trace();
    return -0.25 * (r2 * higgs + r2 * r2 * curv).real();
}

double energy_density_bps(const FieldConfig& cfg, const Point& p) {
    const double f = profile_f(cfg, p);
    const double r2 = p.rho * p.rho;
    return 3.0 * r2 * r2 * f * f;
}

double su2_norm(const Mat2& m) { return std::sqrt(std::max(0.0, -0.5 * (m * m).trace().real())); }

Connection connection_of(const FieldConfig& cfg) { return {cfg.A, cfg.F}; }

namespace {

struct ExpData {
    Mat2 g;
    double theta;
    double S;  // sin(theta)/theta
    double T;  // (theta cos(theta) - sin(theta))/theta^3
};

ExpData exp_su2(const Mat2& M) {
    const double th = su2_norm(M);
    ExpData e;
    e.theta = th;
    if (th < 1e-4) {
        const double t2 = th * th;
        e.S = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        e.T = -1.0 / 3.0 + t2 / 30.0 - t2 * t2 / 840.0;
    } else {
        e.S = std::sin(th) / th;
        e.T = (th * std::cos(th) - std::sin(th)) / (th * th * th);
    }
    e.g = std::cos(th) * Mat2::identity() + e.S * M;
    return e;
}

}  // namespace

Mat2 higgs_exp(const FieldConfig& cfg, double s, const Point& p) { return exp_su2(s * cfg.Phi(p)).g; }

Connection higgs_gauge_transform(const FieldConfig& cfg, double s) {
    if (!cfg.dPhi || !cfg.F) throw DomainError("gauge transform needs closed-form curvature and Higgs derivative");
    auto base = std::make_shared<FieldConfig>(cfg);
    Connection out;
    out.A = [base, s](const Point& p) -> OneForm {
        const Mat2 M = s * base->Phi(p);
        const OneForm dP = base->dPhi(p);
        const OneForm a = base->A(p);
        const ExpData e = exp_su2(M);
        const Mat2 ginv = e.g.adjoint();
        OneForm r;
        for (int i = 0; i < 3; ++i) {
            const Mat2 dM = s * dP[i];
            const double q = -0.5 * (M * dM).trace().real();
            const Mat2 dg = (-e.S * q) * Mat2::identity() + (e.T * q) * M + e.S * dM;
            r[i] = ginv * dg + ginv * a[i] * e.g;
        }
        return r;
    };
    out.F = [base, s](const Point& p) -> TwoForm {
        const Mat2 g = exp_su2(s * base->Phi(p)).g;
        const Mat2 gi = g.adjoint();
        const TwoForm F = base->F(p);
        return {gi * F.xy * g, gi * F.yrho * g, gi * F.rhox * g};
    };
    return out;
}

}  // namespace hm
