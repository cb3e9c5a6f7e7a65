#include "asianq/identities.hpp"
#include "asianq/cases.hpp"
#include "asianq/errors.hpp"
#include "asianq/pricer.hpp"
#include "asianq/quadrature.hpp"
#include "asianq/specfun.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace asianq {

namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

IdentityReport start(std::string name, double tol) {
    IdentityReport r;
    r.name = std::move(name);
    r.tolerance = tol;
    return r;
}

void record(IdentityReport& r, std::vector<double> tuple, double residual) {
    if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
    r.grid.push_back(std::move(tuple));
    r.max_rel_residual = std::max(r.max_rel_residual, residual);
}

IdentityReport finish(IdentityReport r) {
    r.passed = r.max_rel_residual <= r.tolerance;
    return r;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string suffix(Form f) { return f == Form::corrected ? "_corrected" : ""; }

// ---- quadrature helpers -----------------------------------------------------

struct Panel {
    double a, b, value, err, l1;
};

template <class F>
Panel gk(F& f, double a, double b) {
    Panel p{a, b, 0, 0, 0};
    p.value = gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &p.err, &p.l1);
    return p;
}

template <class F>
double refine(F& f, const Panel& pn, double tol, int depth) {
    if (pn.err <= std::max(tol, 1e3 * eps * pn.l1) || depth == 0) return pn.value;
    const double m = 0.5 * (pn.a + pn.b);
    return refine(f, gk(f, pn.a, m), 0.5 * tol, depth - 1) + refine(f, gk(f, m, pn.b), 0.5 * tol, depth - 1);
}

// fixed-width GK21 panels on [a, b], refined against the total L1 norm
template <class F>
double panels(F&& f, double a, double b, double width) {
    std::vector<Panel> ps;
    double l1 = 0.0;
    for (double s = a; s < b;) {
        const double e = std::min(s + width, b);
        ps.push_back(gk(f, s, e));
        l1 += ps.back().l1;
        s = e;
    }
    double sum = 0.0;
    for (const Panel& pn : ps) sum += refine(f, pn, 1e-14 * l1 * (pn.b - pn.a) / (b - a), 8);
    return sum;
}

// integral over [0, inf) of an integrand that decays in p: truncated where it
// stays below 1e-16 of its running maximum
template <class F>
double index_integral(F&& f, double step = 0.25, double cap = 400.0) {
    double peak = 0.0, p = 0.5 * step;
    int quiet = 0;
    for (; p < cap; p += step) {
        const double v = std::abs(f(p));
        if (!std::isfinite(v)) throw numerical_error("index integral: non-finite integrand");
        peak = std::max(peak, v);
        quiet = v < 1e-16 * peak ? quiet + 1 : 0;
        if (quiet >= 8 && p > 2.0) break;
    }
    if (p >= cap) throw convergence_error("index integral: integrand does not decay");
    return panels(f, 0.0, p, 0.5);
}

// Wynn epsilon extrapolation of a sequence of partial sums
double wynn(const std::vector<double>& s) {
    const std::size_t n = s.size();
    std::vector<double> prev(n + 1, 0.0), cur(s.begin(), s.end());
    double best = s.back();
    for (std::size_t k = 1; cur.size() > 1; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (d == 0.0) return cur[i + 1];
            next[i] = prev[i + 1] + 1.0 / d;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) best = cur.back();
    }
    return best;
}

double log_sinh_pi(double p) { return pi * p + std::log1p(-std::exp(-2.0 * pi * p)) - std::numbers::ln2; }

// log of p sinh(pi p) |Gamma(g)|^2
double log_measure(double p, ComplexValue g) {
    return std::log(p) + log_sinh_pi(p) + 2.0 * log_gamma_complex(g).real();
}

// K_{ip}(x) times exp(log_weight), without forming either factor alone
double k_times(double p, double x, double log_weight) {
    const ScaledValue k = bessel_k_imag_scaled(p, x);
    return k.value * std::exp(log_weight - k.log_scale);
}

double wreal(double kappa, double mu_im, double z) { return whittaker_w({kappa, {0.0, mu_im}}, z).real(); }

double log_factorial(int n) { return std::lgamma(n + 1.0); }

} // namespace

Suite suite_from_string(const std::string& s) {
    if (s == "all") return Suite::all;
    if (s == "specfun") return Suite::specfun;
    if (s == "transforms") return Suite::transforms;
    if (s == "kernel") return Suite::kernel;
    if (s == "pricing") return Suite::pricing;
    throw domain_error("unknown suite: " + s);
}

std::string to_string(Suite s) {
    switch (s) {
    case Suite::all: return "all";
    case Suite::specfun: return "specfun";
    case Suite::transforms: return "transforms";
    case Suite::kernel: return "kernel";
    case Suite::pricing: return "pricing";
    }
    return "all";
}

// ---- special functions -------------------------------------------------------

IdentityReport check_gamma_identity(double tol) {
    IdentityReport r = start("gamma_identity", tol);
    for (int i = 0; i <= 40; ++i) {
        const double p = 0.25 * i;
        record(r, {0.5, p}, rel(gamma_abs_sq(0.5, p) * std::cosh(pi * p), pi));
    }
    return finish(r);
}

IdentityReport check_gamma_recurrence(double tol) {
    IdentityReport r = start("gamma_recurrence", tol);
    for (double re : {-2.5, 0.3, 1.0, 7.2}) {
        for (double im : {0.0, 0.5, 3.0, 20.0}) {
            if (im == 0.0 && re < 0.0) continue;
            const ComplexValue z(re, im);
            // log Gamma(z+1) - log Gamma(z) = log z modulo 2 pi i
            const ComplexValue d = log_gamma_complex(z + 1.0) - log_gamma_complex(z) - std::log(z);
            const double wrapped = std::remainder(d.imag(), 2.0 * pi);
            record(r, {re, im}, std::hypot(d.real(), wrapped));
        }
    }
    return finish(r);
}

IdentityReport check_kummer_transform(double tol) {
    IdentityReport r = start("kummer_transform", tol);
    KummerOptions direct;
    direct.allow_transform = false;
    const struct {
        ComplexValue a, b;
        double z;
    } pts[] = {{{0.5, 0.7}, {1.2, 0.4}, 3.0}, {{1.5, -2.0}, {2.5, 1.0}, 1.0}, {{-0.3, 1.0}, {0.7, 0.0}, 6.0},
               {{2.0, 0.5}, {3.0, 2.0}, 0.2}};
    for (const auto& t : pts) {
        const ComplexValue lhs = kummer_m(t.a, t.b, t.z, direct);
        const ComplexValue rhs = std::exp(t.z) * kummer_m(t.b - t.a, t.b, -t.z, direct);
        record(r, {t.a.real(), t.a.imag(), t.b.real(), t.b.imag(), t.z}, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return finish(r);
}

IdentityReport check_tricomi_paths(double tol) {
    IdentityReport r = start("tricomi_paths", tol);
    const struct {
        ComplexValue a, b;
        double z;
    } pts[] = {{{1.5, 0.5}, {2.0, 1.0}, 1.0}, {{2.0, 0.0}, {0.5, 2.0}, 5.0}, {{0.7, 3.0}, {1.4, 6.0}, 12.0},
               {{1.0, 1.0}, {-0.5, 0.3}, 0.3}};
    for (const auto& t : pts) {
        const ComplexValue u1 = tricomi_u(t.a, t.b, t.z, TricomiPath::integral);
        const ComplexValue u2 = tricomi_u(t.a, t.b, t.z, TricomiPath::connection);
        record(r, {t.a.real(), t.a.imag(), t.b.real(), t.b.imag(), t.z}, std::abs(u1 - u2) / std::abs(u1));
    }
    return finish(r);
}

IdentityReport check_whittaker_reality(double tol) {
    IdentityReport r = start("whittaker_reality", tol);
    for (double kappa : {-3.0, -1.0, 0.0, 1.0}) {
        for (double p : {0.5, 2.0, 6.0}) {
            for (double z : {0.5, 5.0, 50.0}) {
                const ComplexValue w = whittaker_w({kappa, {0.0, p}}, z);
                record(r, {kappa, p, z}, std::abs(w.imag()) / std::abs(w));
            }
        }
    }
    return finish(r);
}

IdentityReport check_whittaker_bessel_bridge(double tol) {
    IdentityReport r = start("whittaker_bessel_bridge", tol);
    for (double p : {0.5, 1.0, 2.0}) {
        for (double x : {0.5, 1.0, 4.0}) {
            const double w = wreal(0.0, p, 2.0 * x);
            record(r, {p, x}, rel(w, std::sqrt(2.0 * x / pi) * bessel_k_imag(p, x)));
        }
    }
    return finish(r);
}

IdentityReport check_whittaker_pde(double tol) {
    IdentityReport r = start("whittaker_pde", tol);
    for (double kappa : {-1.2, 0.0, 0.5}) {
        for (double p : {0.5, 2.0}) {
            double fmax = 0.0;
            std::vector<double> res;
            for (double z : {1.0, 2.0, 5.0}) {
                const double h = 0.01 * z;
                double f[5];
                for (int j = 0; j < 5; ++j) f[j] = wreal(kappa, p, z + (j - 2) * h);
                const double d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
                res.push_back(std::abs(d2 + (-0.25 + kappa / z + (0.25 + p * p) / (z * z)) * f[2]));
                fmax = std::max(fmax, std::abs(f[2]));
            }
            for (double v : res) record(r, {kappa, p}, v / fmax);
        }
    }
    // one tuple per (kappa, p)
    std::vector<std::vector<double>> g;
    for (auto& t : r.grid)
        if (g.empty() || g.back() != t) g.push_back(t);
    r.grid = g;
    return finish(r);
}

IdentityReport check_conical_laplace(double mu, double p, double x, double tol) {
    IdentityReport r = start("conical_laplace", tol);
    // v = 1 + u^2 removes the endpoint behaviour (v - 1)^{-mu}
    auto f = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double v = 1.0 + u * u;
        // leading term of P near v = 1, where v - 1 is lost to rounding
        if (u < 1e-6) return 2.0 * std::pow(u, 1.0 - 2.0 * mu) * std::exp(-x) / std::tgamma(1.0 - mu);
        return 2.0 * u * std::exp(-x * v) * std::pow(u * u * (2.0 + u * u), -0.5 * mu) * conical_p(mu, p, v);
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    const double lhs = ts.integrate(f, 0.0, std::sqrt(41.0 / x), 1e-13);
    const double rhs = std::sqrt(2.0 / pi) * std::pow(x, mu - 0.5) * bessel_k_imag(p, x);
    record(r, {mu, p, x}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_parabolic_hermite(double tol) {
    IdentityReport r = start("parabolic_hermite", tol);
    for (int n = 0; n <= 6; ++n) {
        for (double x : {0.3, 1.0, 2.0}) {
            const double d = parabolic_d(n, std::numbers::sqrt2 * x);
            const double rhs = std::pow(2.0, -0.5 * n) * std::exp(-0.5 * x * x) * hermite_poly(n, x);
            const double scale = std::exp(-0.5 * x * x) * std::exp(0.5 * log_factorial(n));
            record(r, {double(n), x}, std::abs(d - rhs) / scale);
        }
    }
    return finish(r);
}

IdentityReport check_bessel_poly_orthogonality(double a, double b, int m, int n, double tol) {
    IdentityReport r = start("bessel_poly_orthogonality", tol);
    if (m < 0 || n < 0 || m > 4 || n > 4) throw domain_error("bessel_poly_orthogonality: degrees must be in 0..4");
    boost::math::quadrature::exp_sinh<double> es;
    auto inner = [&](int i, int j) {
        auto f = [&](double x) {
            if (!(x > 1e-12 * b) || x > 800.0 * b) return 0.0;
            return std::pow(x / b, 1.0 - a) * std::exp(-x / b) * bessel_poly(i, a, b, x) * bessel_poly(j, a, b, x);
        };
        return es.integrate(f, 1e-14);
    };
    auto norm = [&](int k) { return b * std::tgamma(k + 1.0) * std::tgamma(2.0 - a - k); };
    const double got = inner(m, n);
    double res;
    if (m == n) {
        res = rel(got, norm(n));
    } else {
        res = std::abs(got) / std::sqrt(std::abs(inner(m, m) * inner(n, n)));
    }
    record(r, {a, b, double(m), double(n)}, res);
    return finish(r);
}

// ---- index transforms ----------------------------------------------------------

IdentityReport check_kl_roundtrip(KlTestFunction fn, double p_max, double tol) {
    IdentityReport r = start(fn == KlTestFunction::exp_decay ? "kl_roundtrip_exp" : "kl_roundtrip_gauss", tol);
    auto F = [fn](double x) { return fn == KlTestFunction::exp_decay ? std::exp(-x) : x * std::exp(-x * x); };
    const double s_hi = fn == KlTestFunction::exp_decay ? std::log(45.0) : std::log(7.0);
    // forward transform with x = e^s
    auto forward = [&](double p) {
        auto g = [&](double s) {
            const double x = std::exp(s);
            return bessel_k_imag(p, x) * F(x) * x;
        };
        return panels(g, -40.0, s_hi, std::min(0.5, 1.5 / (p + 1e-300)));
    };
    // inverse: 20-point Gauss-Legendre on panels of width 2
    using gl = boost::math::quadrature::gauss<double, 20>;
    std::vector<double> nodes, weights, fp;
    const int np = std::max(1, static_cast<int>(std::ceil(p_max / 2.0)));
    const double w = p_max / np;
    for (int j = 0; j < np; ++j) {
        const double c = (j + 0.5) * w, hw = 0.5 * w;
        auto add = [&](double t, double wt) {
            nodes.push_back(c + hw * t);
            weights.push_back(hw * wt);
        };
        for (std::size_t i = 0; i < gl::abscissa().size(); ++i) {
            const double t = gl::abscissa()[i], wt = gl::weights()[i];
            if (t == 0.0) {
                add(0.0, wt);
            } else {
                add(t, wt);
                add(-t, wt);
            }
        }
    }
    for (double p : nodes) fp.push_back(forward(p));
    for (double x : {0.5, 1.0, 2.0}) {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double p = nodes[i];
            acc += weights[i] * fp[i] * k_times(p, x, std::log(p) + log_sinh_pi(p));
        }
        record(r, {p_max, x}, rel(2.0 / (pi * pi * x) * acc, F(x)));
    }
    return finish(r);
}

IdentityReport check_mixed_kp_integral(double mu, double a, double y, Form form, double tol) {
    IdentityReport r = start("mixed_kp_integral" + suffix(form), tol);
    const double sigma = form == Form::stated ? 0.5 * mu : 0.5 - mu;
    auto f = [&](double p) { return k_times(p, a, log_measure(p, {sigma, p})) * conical_p(mu, p, y); };
    const double lhs = index_integral(f);
    const double rhs = std::sqrt(pi * pi * pi / 2.0) * std::pow(a, 0.5 - mu) * std::exp(-a * y)
                       * std::pow(y * y - 1.0, -0.5 * mu);
    record(r, {mu, a, y}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_mixed_wk_integral(double mu, double x, double y, Form form, double tol) {
    IdentityReport r = start("mixed_wk_integral" + suffix(form), tol);
    if (!(mu <= 0.5)) throw domain_error("mixed_wk_integral: requires mu <= 1/2");
    auto f = [&](double p) {
        const double g = form == Form::stated ? 0.5 * p : p;
        return k_times(p, y, log_measure(p, {0.5 - mu, g})) * wreal(mu, p, 2.0 * x);
    };
    const double lhs = index_integral(f);
    const double rhs = std::sqrt(pi * pi * pi / 2.0) * x * std::pow(y, 0.5 - mu) * std::exp(-(x + y))
                       * std::pow(x + y, mu - 1.0) * std::tgamma(1.0 - mu);
    record(r, {mu, x, y}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_whittaker_addition(double mu, double a, double b, double tol) {
    IdentityReport r = start("whittaker_addition", tol);
    auto f = [&](double p) {
        return std::exp(log_measure(p, {0.5 - mu, p})) * wreal(mu, p, 2.0 * a) / a * wreal(mu, p, 2.0 * b) / b;
    };
    const double lhs = 2.0 / (pi * pi) * index_integral(f);
    const double rhs = 2.0 * std::tgamma(1.0 - mu) / (pi * (a + b)) * whittaker_w({mu, 0.5}, 2.0 * (a + b)).real();
    record(r, {mu, a, b}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_cosine_transform(double mu, double u, double y, double p_max, Form form, double tol) {
    IdentityReport r = start("cosine_transform" + suffix(form), tol);
    auto f = [&](double p) { return wreal(mu, p, 2.0 * u) * std::cos(p * y); };
    const double lhs = panels(f, 0.0, p_max, 0.25);
    const double arg = form == Form::stated ? std::cosh(0.5 * y) * std::sqrt(2.0 * u)
                                            : 2.0 * std::sqrt(u) * std::cosh(0.5 * y);
    const double sh = std::sinh(0.5 * y);
    const double rhs = std::sqrt(pi * u / 2.0) * std::pow(2.0, -mu) * std::exp(-u * sh * sh) * parabolic_d(2.0 * mu, arg);
    record(r, {mu, u, y, p_max}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_macdonald_product(double lambda, double a, double b, double tol) {
    IdentityReport r = start("macdonald_product", tol);
    auto f = [&](double v) { return k_times(v, a, log_measure(v, {lambda, v})) * bessel_k_imag(v, b); };
    const double lhs = index_integral(f);
    const double rhs = std::pow(pi, 1.5) * std::tgamma(lambda + 0.5) / 2.0
                       * std::pow((a + b) / (2.0 * a * b), -lambda) * bessel_k_real(lambda, a + b);
    record(r, {lambda, a, b}, rel(lhs, rhs));
    return finish(r);
}

IdentityReport check_power_expansion(int p_exp, double x, Form form, double tol) {
    IdentityReport r = start("power_expansion" + suffix(form), tol);
    if (p_exp < 0) throw domain_error("power_expansion: p must be nonnegative");
    const double pe = p_exp;
    auto f = [&](double u) { return k_times(u, x, log_measure(u, {-0.5 * pe, 0.5 * u})); };
    // the integrand decays only like u^{-p-1/2}; past u0 it oscillates with the
    // Debye phase u acosh(u/x) - sqrt(u^2 - x^2), summed between its zeros
    const double u0 = std::max(30.0, 2.0 * x);
    double head = panels(f, 0.0, u0, 0.25);
    auto phase = [&](double u) { return u * std::acosh(u / x) - std::sqrt(u * u - x * x) + 0.25 * pi; };
    auto zero = [&](double target, double u) {
        for (int it = 0; it < 50; ++it) {
            const double du = (phase(u) - target) / std::acosh(u / x);
            u -= du;
            if (std::abs(du) < 1e-14 * u) break;
        }
        return u;
    };
    double j = std::ceil(phase(u0) / pi);
    double lo = zero(j * pi, u0);
    head += panels(f, u0, lo, 0.25);
    std::vector<double> partial;
    double acc = head;
    for (int k = 0; k < 40; ++k) {
        j += 1.0;
        const double hi = zero(j * pi, lo + pi / std::acosh(lo / x));
        acc += panels(f, lo, hi, hi - lo);
        partial.push_back(acc);
        lo = hi;
    }
    const double cont = std::pow(2.0, -pe) / (2.0 * pi * pi) * wynn(partial);
    double disc = 0.0;
    for (int k = 0; 2 * k <= p_exp; ++k) {
        const int q = p_exp - 2 * k;
        const double num = form == Form::stated ? std::tgamma(q + 1.0) : double(q);
        disc += num / (std::tgamma(k + 1.0) * std::tgamma(p_exp - k + 1.0)) * bessel_k_real(q, x);
    }
    disc *= std::pow(2.0, 1.0 - pe);
    record(r, {pe, x}, rel(cont + disc, std::pow(x, -pe)));
    return finish(r);
}

// ---- kernels ----------------------------------------------------------------------

IdentityReport check_mehler_kernel(double t, double x, double y, int n_terms, double tol) {
    IdentityReport r = start("mehler_kernel", tol);
    if (!(t > 0.0) || n_terms < 1) throw domain_error("mehler_kernel: requires t > 0 and n_terms >= 1");
    const double closed = std::exp(x * y / std::sinh(t) - 0.5 * (x * x + y * y) / std::tanh(t))
                          / std::sqrt(2.0 * pi * std::sinh(t));
    double sum = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        const double lc = -(n + 0.5) * t - 0.5 * std::log(pi) - n * std::numbers::ln2 - log_factorial(n);
        sum += std::exp(lc) * hermite_poly(n, x) * hermite_poly(n, y);
    }
    sum *= std::exp(-0.5 * (x * x + y * y));
    record(r, {t, x, y, double(n_terms)}, rel(sum, closed));
    return finish(r);
}

IdentityReport check_yor_eigenfunction(double zeta, double p, const std::vector<double>& u_points, Form form,
                                       double tol) {
    IdentityReport r = start("yor_eigenfunction" + suffix(form), tol);
    const double kappa = 0.75 - 0.5 * zeta;
    const double q = form == Form::stated ? p : 0.5 * p;
    const double e = 0.5 * zeta * (1.0 - zeta) - 0.5 * p * p - 0.125;
    auto phi = [&](double u) { return std::exp(0.25 / u) * std::pow(u, kappa) * wreal(kappa, q, 0.5 / u); };
    for (double u : u_points) {
        if (!(u > 0.0)) throw domain_error("yor_eigenfunction: points must be positive");
        const double h = 1e-4 * u;
        const double fm = phi(u - h), f0 = phi(u), fp = phi(u + h);
        const double d1 = (fp - fm) / (2.0 * h);
        const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
        const double res = 2.0 * u * u * d2 + ((2.0 * zeta + 1.0) * u + 1.0) * d1 - e * f0;
        record(r, {zeta, p, u}, std::abs(res) / (std::abs(e * f0) + 1e-300));
    }
    return finish(r);
}

// ---- pricing ------------------------------------------------------------------------

IdentityReport check_put_call_parity(double tol) {
    IdentityReport r = start("put_call_parity", tol);
    for (int id = 2; id <= case_count; ++id) {
        const MarketParams m = case_params(id);
        const PriceResult pr = price(m);
        record(r, {double(id)}, std::abs(pr.call - pr.put - parity_gap(m)) / std::abs(pr.call));
    }
    return finish(r);
}

IdentityReport check_laguerre_exactness(double tol) {
    IdentityReport r = start("laguerre_exactness", tol);
    for (int n : {4, 8, 16, 32, 64}) {
        const QuadratureRule rule = gauss_laguerre_rule(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            // sum w_i x_i^k against k!
            long double acc = 0.0L;
            for (int i = 0; i < n; ++i)
                acc += std::exp(static_cast<long double>(rule.log_weights[i]) + k * std::log((long double)rule.nodes[i]));
            record(r, {double(n), double(k)}, rel(static_cast<double>(acc), std::tgamma(k + 1.0)));
        }
    }
    return finish(r);
}

IdentityReport check_strike_monotonicity() {
    IdentityReport r = start("strike_monotonicity", 0.0);
    for (int id : {2, 5}) {
        MarketParams m = case_params(id);
        double prev_call = INFINITY, prev_put = -INFINITY;
        int violations = 0;
        for (double K : {1.7, 1.85, 2.0, 2.15, 2.3}) {
            m.K = K;
            const PriceResult pr = price(m);
            if (!(pr.call < prev_call) || !(pr.put > prev_put)) ++violations;
            prev_call = pr.call;
            prev_put = pr.put;
        }
        record(r, {double(id)}, violations);
    }
    return finish(r);
}

IdentityReport check_method_agreement(double tol) {
    IdentityReport r = start("method_agreement", tol);
    for (int id = 2; id <= case_count; ++id) {
        const MarketParams m = case_params(id);
        const double lag = price(m, Method::laguerre, 128).call;
        const double trap = price(m, Method::trapezoid, 20000).call;
        record(r, {double(id)}, rel(lag, trap));
    }
    return finish(r);
}

// ---- runner -----------------------------------------------------------------------------

namespace {

// folds several single-tuple reports of one identity into one
IdentityReport merge(const std::vector<IdentityReport>& parts) {
    IdentityReport r = start(parts.front().name, parts.front().tolerance);
    for (const IdentityReport& p : parts)
        for (const auto& t : p.grid) record(r, t, p.max_rel_residual);
    return finish(r);
}

void specfun_suite(std::vector<IdentityReport>& out, double s) {
    out.push_back(check_gamma_identity(1e-12 * s));
    out.push_back(check_gamma_recurrence(1e-12 * s));
    out.push_back(check_kummer_transform(1e-10 * s));
    out.push_back(check_tricomi_paths(1e-9 * s));
    out.push_back(check_whittaker_reality(1e-10 * s));
    out.push_back(check_whittaker_bessel_bridge(1e-8 * s));
    out.push_back(check_whittaker_pde(1e-5 * s));
    std::vector<IdentityReport> lap;
    for (double mu : {-0.5, 0.25, 0.75})
        for (double p : {0.3, 0.8, 2.0})
            for (double x : {1.0, 2.5}) lap.push_back(check_conical_laplace(mu, p, x, 1e-7 * s));
    out.push_back(merge(lap));
    out.push_back(check_parabolic_hermite(1e-10 * s));
    out.push_back(merge({check_bessel_poly_orthogonality(0.5, 1.0, 1, 2, 1e-8 * s),
                         check_bessel_poly_orthogonality(0.5, 1.0, 1, 1, 1e-8 * s),
                         check_bessel_poly_orthogonality(0.5, 2.0, 0, 0, 1e-8 * s)}));
}

void transforms_suite(std::vector<IdentityReport>& out, double s) {
    out.push_back(check_kl_roundtrip(KlTestFunction::exp_decay, 20.0, 1e-5 * s));
    out.push_back(check_kl_roundtrip(KlTestFunction::gauss, 20.0, 1e-5 * s));
    for (Form f : {Form::stated, Form::corrected}) {
        out.push_back(merge({check_mixed_kp_integral(0.0, 1.0, 1.5, f, 1e-6 * s),
                             check_mixed_kp_integral(0.25, 2.0, 2.0, f, 1e-6 * s),
                             check_mixed_kp_integral(0.0, 0.5, 1.05, f, 1e-6 * s),
                             check_mixed_kp_integral(-0.5, 1.0, 2.5, f, 1e-6 * s)}));
    }
    for (Form f : {Form::stated, Form::corrected}) {
        out.push_back(merge({check_mixed_wk_integral(0.0, 1.0, 1.0, f, 1e-5 * s),
                             check_mixed_wk_integral(0.3, 0.8, 1.2, f, 1e-5 * s),
                             check_mixed_wk_integral(0.5, 1.0, 1.0, f, 1e-5 * s)}));
    }
    out.push_back(merge({check_whittaker_addition(0.0, 1.0, 1.0, 1e-5 * s),
                         check_whittaker_addition(0.25, 0.5, 1.5, 1e-5 * s),
                         check_whittaker_addition(0.45, 0.4, 0.9, 1e-5 * s),
                         check_whittaker_addition(0.75, 0.4, 0.9, 1e-5 * s)}));
    for (Form f : {Form::stated, Form::corrected}) {
        out.push_back(merge({check_cosine_transform(0.0, 1.0, 0.0, 40.0, f, 1e-4 * s),
                             check_cosine_transform(0.0, 1.0, 1.0, 40.0, f, 1e-4 * s),
                             check_cosine_transform(0.2, 2.0, 0.5, 40.0, f, 1e-4 * s)}));
    }
    out.push_back(merge({check_macdonald_product(0.5, 1.0, 1.0, 1e-6 * s),
                         check_macdonald_product(1.0, 0.7, 1.3, 1e-6 * s),
                         check_macdonald_product(2.5, 0.3, 2.0, 1e-6 * s)}));
    for (Form f : {Form::stated, Form::corrected}) {
        out.push_back(merge({check_power_expansion(1, 1.0, f, 1e-5 * s), check_power_expansion(2, 1.5, f, 1e-5 * s),
                             check_power_expansion(3, 1.0, f, 1e-5 * s),
                             check_power_expansion(1, 20.0, f, 1e-5 * s)}));
    }
}

void kernel_suite(std::vector<IdentityReport>& out, double s) {
    out.push_back(merge({check_mehler_kernel(1.0, 0.0, 0.0, 40, 1e-10 * s),
                         check_mehler_kernel(2.0, 0.7, -0.4, 60, 1e-10 * s),
                         check_mehler_kernel(0.5, 1.0, -0.5, 100, 1e-10 * s)}));
    for (Form f : {Form::stated, Form::corrected}) {
        out.push_back(merge({check_yor_eigenfunction(1.0, 1.0, {0.5, 1.0, 2.0}, f, 1e-4 * s),
                             check_yor_eigenfunction(0.0, 0.5, {1.0}, f, 1e-4 * s),
                             check_yor_eigenfunction(0.3, 2.0, {0.7}, f, 1e-4 * s)}));
    }
}

void pricing_suite(std::vector<IdentityReport>& out, double s) {
    out.push_back(check_put_call_parity(1e-12 * s));
    out.push_back(check_laguerre_exactness(1e-11 * s));
    out.push_back(check_strike_monotonicity());
    out.push_back(check_method_agreement(1e-7 * s));
}

} // namespace

std::vector<IdentityReport> run_suite(Suite suite, double tol_scale) {
    if (!(tol_scale > 0.0)) throw domain_error("tol_scale must be positive");
    std::vector<IdentityReport> out;
    if (suite == Suite::all || suite == Suite::specfun) specfun_suite(out, tol_scale);
    if (suite == Suite::all || suite == Suite::transforms) transforms_suite(out, tol_scale);
    if (suite == Suite::all || suite == Suite::kernel) kernel_suite(out, tol_scale);
    if (suite == Suite::all || suite == Suite::pricing) pricing_suite(out, tol_scale);
    return out;
}

} // namespace asianq
