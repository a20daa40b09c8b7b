#include "hypermono/integrate.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <memory>
#include <sstream>
#include <thread>

namespace hm {

QuadratureSpec quadrature_for(const FieldConfig& cfg, int nodes_per_axis) {
    QuadratureSpec s;
    s.nodes_per_axis = nodes_per_axis;
    s.axis_scale = std::max(1.0, cfg.lambda);
    s.x_center = cfg.x0;
    s.y_center = cfg.y0;
    return s;
}

void validate(const QuadratureSpec& spec) {
    if (spec.nodes_per_axis < 8) throw DomainError("nodes_per_axis must be at least 8");
    if (!(spec.axis_scale > 0.0)) throw DomainError("axis scale must be positive");
    if (!(spec.rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERMONO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(std::min<long>(v, 1024));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

GLRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)), &gsl_integration_glfixed_table_free);
    if (!table) throw std::runtime_error("failed to allocate Gauss-Legendre table");
    GLRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i)
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &r.nodes[i], &r.weights[i], table.get());
    return r;
}

namespace {

struct Axis {
    std::vector<double> at;
    std::vector<double> weight;
};

Axis real_axis(const GLRule& rule, double c, double center) {
    Axis a;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double d = 1.0 - u * u;
        a.at.push_back(center + c * u / d);
        a.weight.push_back(rule.weights[i] * c * (1.0 + u * u) / (d * d));
    }
    return a;
}

Axis height_axis(const GLRule& rule, double c) {
    Axis a;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = rule.nodes[i];
        const double rho = c * (1.0 + w) / (1.0 - w);
        a.at.push_back(rho);
        a.weight.push_back(rule.weights[i] * 2.0 * c / ((1.0 - w) * (1.0 - w)) / (rho * rho * rho));
    }
    return a;
}

std::string describe_node(int i, int j, int k, const Point& p) {
    std::ostringstream os;
    os << "non-finite density at node (" << i << ", " << j << ", " << k << "), point (" << p.x << ", " << p.y
       << ", " << p.rho << ")";
    return os.str();
}

/// Sums slab results in a fixed pairwise tree.
std::vector<cplx> tree_reduce(std::vector<std::vector<cplx>> parts) {
    size_t n = parts.size();
    while (n > 1) {
        const size_t half = (n + 1) / 2;
        for (size_t i = 0; i + half < n; ++i)
            for (size_t m = 0; m < parts[i].size(); ++m) parts[i][m] += parts[i + half][m];
        n = half;
    }
    return parts.empty() ? std::vector<cplx>{} : parts[0];
}

/// Runs slab(i) for i in [0, n) on a worker pool; slab results are independent of scheduling.
template <class Slab>
std::vector<std::vector<cplx>> run_slabs(int n, int count, int threads, const Slab& slab) {
    std::vector<std::vector<cplx>> parts(n, std::vector<cplx>(count));
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                slab(i, parts[i].data());
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int t = std::clamp(threads, 1, n);
    if (t == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(t);
        for (int k = 0; k < t; ++k) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return parts;
}

}  // namespace

std::vector<cplx> integrate_h3(const MultiDensity& density, int count, const QuadratureSpec& spec) {
    validate(spec);
    const GLRule rule = gauss_legendre(spec.nodes_per_axis);
    const Axis ax = real_axis(rule, spec.axis_scale, spec.x_center);
    const Axis ay = real_axis(rule, spec.axis_scale, spec.y_center);
    const Axis ar = height_axis(rule, spec.axis_scale);
    const int n = spec.nodes_per_axis;

    auto slab = [&](int i, cplx* acc) {
        std::vector<cplx> val(count);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Point p{ax.at[i], ay.at[j], ar.at[k]};
                std::fill(val.begin(), val.end(), cplx(0.0));
                density(p, val.data());
                const double w = ax.weight[i] * ay.weight[j] * ar.weight[k];
                for (int m = 0; m < count; ++m) {
                    if (!std::isfinite(val[m].real()) || !std::isfinite(val[m].imag()))
                        throw QuadratureError(describe_node(i, j, k, p));
                    acc[m] += w * val[m];
                }
            }
        }
    };
    return tree_reduce(run_slabs(n, count, resolve_threads(spec.threads), slab));
}

cplx integrate_h3(const Density& density, const QuadratureSpec& spec) {
    return integrate_h3([&](const Point& p, cplx* out) { out[0] = density(p); }, 1, spec)[0];
}

cplx integrate_top_form(const Density& w, const QuadratureSpec& spec) {
    return integrate_h3([&](const Point& p) { return hodge_top(p) * w(p); }, spec);
}

std::vector<cplx> integrate_horosphere(const MultiDensity& w, int count, double rho, const QuadratureSpec& spec) {
    validate(spec);
    if (!(rho > 0.0)) throw DomainError("horosphere height must be positive");
    const GLRule rule = gauss_legendre(spec.nodes_per_axis);
    const Axis ax = real_axis(rule, spec.axis_scale, spec.x_center);
    const Axis ay = real_axis(rule, spec.axis_scale, spec.y_center);
    const int n = spec.nodes_per_axis;

    auto slab = [&](int i, cplx* acc) {
        std::vector<cplx> val(count);
        for (int j = 0; j < n; ++j) {
            const Point p{ax.at[i], ay.at[j], rho};
            std::fill(val.begin(), val.end(), cplx(0.0));
            w(p, val.data());
            for (int m = 0; m < count; ++m) {
                if (!std::isfinite(val[m].real()) || !std::isfinite(val[m].imag()))
                    throw QuadratureError(describe_node(i, j, -1, p));
                acc[m] += ax.weight[i] * ay.weight[j] * val[m];
            }
        }
    };
    return tree_reduce(run_slabs(n, count, resolve_threads(spec.threads), slab));
}

double energy(const FieldConfig& cfg, const QuadratureSpec& spec) {
    return integrate_h3([&](const Point& p) { return cplx(energy_density(cfg, p)); }, spec).real();
}

cplx omega_pair(const EigenSpinorField& nu1, const EigenSpinorField& nu2, const QuadratureSpec& spec) {
    return integrate_h3([&](const Point& p) { return -0.5 * pair(nu1.nu(p), nu2.nu(p)).trace(); }, spec);
}

GramMatrix gram_matrix(const FieldConfig& cfg, const QuadratureSpec& spec) {
    auto [e1, e2] = eigenspinors(cfg);
    auto density = [&](const Point& p, cplx* out) {
        const std::array<DeformationValue, 4> t = tangent_values(cfg, p);
        const double r2 = p.rho * p.rho;
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                cplx s = 0.0;
                for (int j = 0; j < 3; ++j) s += (t[mu].a[j] * t[nu].a[j]).trace();
                out[4 * mu + nu] = -0.5 * (r2 * s + (t[mu].phi * t[nu].phi).trace());
            }
        }
        const GaugeSpinor v[2] = {e1.nu(p), e2.nu(p)};
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) out[16 + 2 * a + c] = -0.5 * pair(v[a], v[c]).trace();
    };
    const std::vector<cplx> r = integrate_h3(density, 20, spec);

    GramMatrix g;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) g.direct[mu][nu] = r[4 * mu + nu];
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) g.omega_nu[a][c] = r[16 + 2 * a + c];

    // pair(psi_1, psi_2) = 1, so pair(psi_beta, psi_delta) is the unit skew matrix
    const double eps[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};
    for (int mu = 0; mu < 4; ++mu) {
        const auto cm = spinor_coefficients(mu);
        for (int nu = 0; nu < 4; ++nu) {
            const auto cn = spinor_coefficients(nu);
            cplx s = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d) s += cm[a][b] * cn[c][d] * 0.5 * eps[b][d] * g.omega_nu[a][c];
            g.omega[mu][nu] = s;
        }
    }
    return g;
}

cplx chern_simons_form(const OneForm& A, const TwoForm& F) {
    const cplx af = (A[0] * F.yrho + A[1] * F.rhox + A[2] * F.xy).trace();
    const cplx aaa = 3.0 * (A[0] * comm(A[1], A[2])).trace();
    return af - aaa / 3.0;
}

ChernSimonsResult chern_simons_detail(const Connection& A0, const Connection& A1, const QuadratureSpec& spec) {
    ChernSimonsResult r;
    auto bulk = [&](const Point& p, cplx* out) {
        const double top = hodge_top(p);
        out[0] = top * chern_simons_form(A1.A(p), A1.F(p));
        out[1] = top * chern_simons_form(A0.A(p), A0.F(p));
    };
    const std::vector<cplx> b = integrate_h3(bulk, 2, spec);
    r.bulk1 = b[0].real();
    r.bulk0 = b[1].real();

    auto wedge = [&](const Point& p, cplx* out) {
        const OneForm a0 = A0.A(p), a1 = A1.A(p);
        out[0] = (a0[0] * a1[1] - a0[1] * a1[0]).trace();
    };
    const double scale = std::max(1.0, std::abs(r.bulk1 - r.bulk0));
    double rho = 1e-2;
    constexpr int max_levels = 8;
    for (int level = 0; level < max_levels; ++level, rho *= 0.5) {
        r.horosphere_rho.push_back(rho);
        r.horosphere_value.push_back(integrate_horosphere(wedge, 1, rho, spec)[0].real());
        const size_t m = r.horosphere_value.size();
        if (m < 3) continue;
        const double b1 = r.horosphere_value[m - 3], b2 = r.horosphere_value[m - 2], b3 = r.horosphere_value[m - 1];
        const double d1 = b2 - b1, d2 = b3 - b2;
        r.monotone = std::abs(d2) <= std::abs(d1) || std::abs(d1) < 1e-14;
        // order of the leading rho^k term from the ratio of successive differences
        double k = 1.0;
        if (std::abs(d2) > 1e-300 && d1 / d2 > 0.0) k = std::clamp(std::log2(d1 / d2), 1.0, 4.0);
        const double f = 1.0 / (std::pow(2.0, k) - 1.0);
        const double e12 = b2 + f * d1, e23 = b3 + f * d2;
        r.boundary = e23;
        r.converged = r.monotone && std::abs(e23 - e12) <= spec.rel_tol * scale;
        if (r.converged) break;
    }
    r.total = r.bulk1 - r.bulk0 + r.boundary;
    return r;
}

double chern_simons(const Connection& A0, const Connection& A1, const QuadratureSpec& spec) {
    const ChernSimonsResult r = chern_simons_detail(A0, A1, spec);
    if (!r.converged) {
        std::ostringstream os;
        os << "horosphere extrapolation did not converge over " << r.horosphere_rho.size() << " levels";
        throw ConvergenceError(os.str());
    }
    return r.total;
}

double cs_rate(const FieldConfig& cfg, const QuadratureSpec& spec) {
    auto w = [&](const Point& p) {
        const TwoForm F = field_strength(cfg, p);
        const OneForm d = higgs_derivative(cfg, p);
        return 2.0 * (F.yrho * d[0] + F.rhox * d[1] + F.xy * d[2]).trace();
    };
    return integrate_top_form(w, spec).real();
}

double framedness(int j, const QuadratureSpec& spec, ChiForm form) {
    const FieldConfig cfg = one_monopole();
    auto w = [&](const Point& p) {
        const TwoForm F = field_strength(cfg, p);
        const OneForm d = chi_mode(j, p, form).a;
        return (F.yrho * d[0] + F.rhox * d[1] + F.xy * d[2]).trace();
    };
    return integrate_top_form(w, spec).real();
}

long long IndexPolynomial::coefficient(int exponent) const {
    const auto it = coefficients.find(exponent);
    return it == coefficients.end() ? 0 : it->second;
}

bool IndexPolynomial::palindromic() const {
    for (const auto& [k, c] : coefficients)
        if (coefficient(-k) != c) return false;
    return true;
}

namespace {

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = k < 0 ? "⁻" : "";
    for (char ch : std::to_string(std::abs(k))) s += digits[ch - '0'];
    return s;
}

}  // namespace

std::string IndexPolynomial::to_string() const {
    std::string s;
    for (const auto& [k, c] : coefficients) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "γ" + (k == 1 ? "" : superscript(k));
    }
    return s.empty() ? "0" : s;
}

IndexPolynomial equivariant_index(int n, int p2) {
    if (n < 1) throw DomainError("charge n must be at least 1");
    if (p2 < 1) throw DomainError("2p must be a positive integer");
    IndexPolynomial poly;
    for (int j = 0; j < 2 * p2; ++j) poly.coefficients[2 * j + 1 - 2 * p2] += 2LL * n;
    return poly;
}

}  // namespace hm
