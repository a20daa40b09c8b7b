#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "hypermono/integrate.hpp"
#include "hypermono/report.hpp"
#include "hypermono/suites.hpp"

namespace {

using namespace hm;

constexpr double pi = std::numbers::pi;
constexpr double ladder_tol = 1e-4;

struct Options {
    std::string suite = "all";
    double x0 = 0.0, y0 = 0.0, lambda = 1.0;
    int nodes = 64;
    double tol = -1.0;
    double h = 1e-4;
    int points = 10;
    std::uint64_t seed = 42;
    double s = 0.1;
    int n = 1;
    int p2 = 1;
    std::string format = "text";
    std::string out;
    bool no_timing = false;
};

double tol_or(const Options& o, double fallback) { return o.tol > 0.0 ? o.tol : fallback; }

double max_abs(const Complex4x4& m, bool imag_only) {
    double r = 0.0;
    for (const auto& row : m)
        for (const auto& e : row) r = std::max(r, imag_only ? std::abs(e.imag()) : std::abs(e));
    return r;
}

Complex4x4 minus_identity(const Complex4x4& m, double c) {
    Complex4x4 r = m;
    for (int i = 0; i < 4; ++i) r[i][i] -= c;
    return r;
}

RunReport cmd_verify(const Options& o) {
    RunReport r;
    r.command = "verify";
    r.parameters = {{"suite", o.suite}, {"h", o.h}, {"points", o.points}, {"seed", o.seed}};
    VerifyOptions v;
    v.h = o.h;
    v.points = o.points;
    v.seed = o.seed;
    v.residual_tol = tol_or(o, 1e-5);
    r.parameters["tol"] = v.residual_tol;
    r.results = run_suite(o.suite, v);
    return r;
}

RunReport cmd_metric(const Options& o) {
    RunReport r;
    r.command = "metric";
    const double tol = tol_or(o, 1e-3);
    r.parameters = {{"x0", o.x0}, {"y0", o.y0}, {"lambda", o.lambda}, {"nodes", o.nodes}, {"tol", tol}};
    const FieldConfig cfg = one_monopole(o.x0, o.y0, o.lambda);
    const double target = 2.0 * pi * cfg.n * cfg.p_mass;

    const GramMatrix g = gram_matrix(cfg, quadrature_for(cfg, o.nodes));
    const GramMatrix fine = gram_matrix(cfg, quadrature_for(cfg, 2 * o.nodes));

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const std::string name = "g[" + std::to_string(mu) + "][" + std::to_string(nu) + "]";
            if (mu == nu) r.results.push_back(check_relative(name, g.direct[mu][nu], cplx(target), tol));
            else r.results.push_back(check_relative(name, g.direct[mu][nu], cplx(0.0), tol * target));
        }
    r.results.push_back(check_at_most("max |G - 2 pi n p I| / (2 pi n p), direct route",
                                      max_abs(minus_identity(g.direct, target), false) / target, tol));
    r.results.push_back(check_at_most("max |G - 2 pi n p I| / (2 pi n p), omega route",
                                      max_abs(minus_identity(g.omega, target), false) / target, tol));
    r.results.push_back(check_at_most("max |Im G| / (2 pi n p)", max_abs(g.direct, true) / target, tol));
    Complex4x4 diff;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) diff[i][j] = g.direct[i][j] - g.omega[i][j];
    r.results.push_back(check_at_most("route disagreement / (2 pi n p)", max_abs(diff, false) / target, 2.0 * tol));
    r.results.push_back(check_relative("omega(nu_1, nu_2)", g.omega_nu[0][1], cplx(target), tol));

    Complex4x4 step;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) step[i][j] = fine.direct[i][j] - g.direct[i][j];
    r.results.push_back(check_at_most("node doubling change / max |G|", max_abs(step, false) / max_abs(fine.direct, false),
                                      ladder_tol));
    for (int i = 0; i < 4; ++i) {
        r.convergence.push_back({"g[" + std::to_string(i) + "][" + std::to_string(i) + "]", o.nodes, g.direct[i][i]});
        r.convergence.push_back({"g[" + std::to_string(i) + "][" + std::to_string(i) + "]", 2 * o.nodes, fine.direct[i][i]});
    }
    return r;
}

RunReport cmd_cs(const Options& o) {
    RunReport r;
    r.command = "cs";
    const double tol = tol_or(o, 1e-3);
    r.parameters = {{"s", o.s}, {"nodes", o.nodes}, {"tol", tol}};
    const FieldConfig cfg = one_monopole();
    const double rate_expected = -4.0 * pi * cfg.n * cfg.p_mass;

    const Connection A = connection_of(cfg), As = higgs_gauge_transform(cfg, o.s);
    QuadratureSpec q = quadrature_for(cfg, o.nodes);
    const ChernSimonsResult cs = chern_simons_detail(A, As, q);
    const ChernSimonsResult cs_fine = chern_simons_detail(A, As, quadrature_for(cfg, 2 * o.nodes));
    const double rate = cs_rate(cfg, q);
    const double rate_fine = cs_rate(cfg, quadrature_for(cfg, 2 * o.nodes));

    r.results.push_back(check_relative("CS[A, A^s]", cs.total, rate_expected * o.s + 0.0, 5.0 * tol));
    r.results.push_back(check_relative("cs_rate", rate, rate_expected, tol));
    if (o.s != 0.0) r.results.push_back(check_relative("CS[A, A^s] / s against cs_rate", cs.total / o.s, rate, 2.0 * tol));
    r.results.push_back(check_at_most("CS[A^s, A] + CS[A, A^s]", chern_simons_detail(As, A, q).total + cs.total, tol));
    r.results.push_back(check_at_least("horosphere extrapolation converged", cs.converged ? 1.0 : 0.0, 1.0));
    r.results.push_back(check_at_most("bulk term of A^s", cs.bulk1, std::numeric_limits<double>::infinity()));
    r.results.push_back(check_at_most("bulk term of A", cs.bulk0, std::numeric_limits<double>::infinity()));
    r.results.push_back(check_at_most("extrapolated boundary term", cs.boundary, std::numeric_limits<double>::infinity()));

    const double scale = std::max(std::abs(cs_fine.total), 1.0);
    r.results.push_back(check_at_most("node doubling change, CS", std::abs(cs_fine.total - cs.total) / scale, ladder_tol));
    r.results.push_back(check_at_most("node doubling change, cs_rate", std::abs(rate_fine - rate) / std::abs(rate_fine), ladder_tol));

    r.convergence.push_back({"CS[A, A^s]", o.nodes, cs.total});
    r.convergence.push_back({"CS[A, A^s]", 2 * o.nodes, cs_fine.total});
    r.convergence.push_back({"cs_rate", o.nodes, rate});
    r.convergence.push_back({"cs_rate", 2 * o.nodes, rate_fine});
    for (size_t i = 0; i < cs.horosphere_rho.size(); ++i)
        r.convergence.push_back({"horosphere rho=" + std::to_string(cs.horosphere_rho[i]), static_cast<int>(i),
                                 cs.horosphere_value[i]});
    return r;
}

RunReport cmd_index(const Options& o, std::string& headline) {
    RunReport r;
    r.command = "index";
    r.parameters = {{"n", o.n}, {"p2", o.p2}};
    const IndexPolynomial poly = equivariant_index(o.n, o.p2);
    const double two_n = 2.0 * o.n;
    for (const auto& [k, c] : poly.coefficients)
        r.results.push_back(check_relative("coefficient of gamma^" + std::to_string(k), double(c), two_n, 0.0));
    r.results.push_back(check_relative("number of terms", double(poly.coefficients.size()), double(2 * o.p2), 0.0));
    r.results.push_back(check_at_least("palindromic", poly.palindromic() ? 1.0 : 0.0, 1.0));
    r.results.push_back(check_relative("dim E+", double(poly.dim_plus()), two_n, 0.0));
    r.results.push_back(check_relative("dim E-", double(poly.dim_minus()), two_n, 0.0));
    headline = poly.to_string() + "; dim E± = " + std::to_string(poly.dim_plus());
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic monopole moduli: verification and integrals"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "write the report to this path");
        sub->add_flag("--no-timing", o.no_timing, "report wall time as 0 for reproducible output");
        sub->add_option("--tol", o.tol, "tolerance override")->check(CLI::PositiveNumber);
    };

    app.set_help_flag("--help", "print help");
    auto* verify = app.add_subcommand("verify", "residual and identity checks");
    verify->set_help_flag("--help", "print help");
    std::vector<std::string> suites = suite_names;
    suites.push_back("all");
    verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites));
    verify->add_option("--h", o.h, "base finite-difference step")->check(CLI::PositiveNumber);
    verify->add_option("--points", o.points, "number of sample points")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "sampling seed");
    common(verify);

    auto* metric = app.add_subcommand("metric", "Gram matrix of the symmetry tangent vectors");
    metric->add_option("--x0", o.x0);
    metric->add_option("--y0", o.y0);
    metric->add_option("--lambda", o.lambda)->check(CLI::PositiveNumber);
    metric->add_option("--nodes", o.nodes)->check(CLI::Range(8, 1024));
    common(metric);

    auto* cs = app.add_subcommand("cs", "Chern-Simons number along the Higgs gauge orbit");
    cs->add_option("--s", o.s);
    cs->add_option("--nodes", o.nodes)->check(CLI::Range(8, 1024));
    common(cs);

    auto* index = app.add_subcommand("index", "equivariant index polynomial");
    index->add_option("--n", o.n)->check(CLI::PositiveNumber);
    index->add_option("--p2", o.p2)->check(CLI::PositiveNumber);
    common(index);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunReport report;
    std::string headline;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*verify) report = cmd_verify(o);
        else if (*metric) report = cmd_metric(o);
        else if (*cs) report = cmd_cs(o);
        else report = cmd_index(o, headline);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
    if (!o.no_timing) report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (o.format == "json") text = to_json(report).dump(2) + "\n";
    else if (o.format == "csv") text = to_csv(report);
    else text = (headline.empty() ? "" : headline + "\n") + to_text(report);

    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return report.all_pass() ? 0 : 1;
}
