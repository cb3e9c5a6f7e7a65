#include "asianq/pricer.hpp"
#include "asianq/errors.hpp"
#include "asianq/mc.hpp"
#include "asianq/quadrature.hpp"
#include "asianq/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace asianq {

namespace {

constexpr double pi = std::numbers::pi;

double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2; }

// p-independent part of the log integrand
double log_prefactor(const NormalizedParams& np) {
    return -0.5 * np.nu * np.nu * np.tau - np.kappa * std::log(2.0 * np.k) - 0.25 / np.k
           - std::log(8.0 * pi * pi);
}

// log of an upper bound for |integrand(p)| from
// |W_{kappa,iq}(z)| <= e^{-z/2} z^{1/2} Gamma(alpha) z^{-alpha} / |Gamma(alpha + iq)|, alpha = 1/2 - kappa
double log_integrand_bound(double p, const NormalizedParams& np) {
    const double z = 0.5 / np.k;
    const double alpha = 0.5 - np.kappa;
    const double logw = -0.5 * z + 0.5 * std::log(z) + std::lgamma(alpha) - alpha * std::log(z)
                        - log_gamma_complex({alpha, 0.5 * p}).real();
    return log_prefactor(np) - 0.5 * p * p * np.tau
           + 2.0 * log_gamma_complex({0.5 * np.nu, 0.5 * p}).real() + std::log(p) + log_sinh(pi * p)
           + logw;
}

double exp_checked(double x) {
    if (x > 709.0) throw overflow_error("pricer: integrand sum exceeds the double range");
    return std::exp(x);
}

double laguerre_sum(const NormalizedParams& np, int n, int* skipped) {
    const QuadratureRule rule = gauss_laguerre_rule(n);
    // the bound needs kappa <= 1/2, i.e. nu >= -4
    const bool can_skip = np.kappa <= 0.5;
    double sum = 0.0;
    double log_max = -INFINITY;
    int skip = 0;
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[i];
        const double lw = rule.log_weights[i] + x;
        if (can_skip && log_max > -INFINITY && lw + log_integrand_bound(x, np) < log_max - 60.0) {
            ++skip;
            continue;
        }
        const LogMagnitude g = continuous_integrand_log(x, np);
        const double lt = lw + g.log_mag;
        log_max = std::max(log_max, lt);
        sum += std::cos(g.phase) * exp_checked(lt);
    }
    if (skipped) *skipped = skip;
    return sum;
}

double trapezoid_sum(const NormalizedParams& np, int panels) {
    const double pmax = trapezoid_pmax(np);
    const IntegrationResult r =
        integrate_trapezoid([&](double p) { return continuous_integrand(p, np); }, 0.0, pmax, panels);
    return r.value;
}

} // namespace

void validate(const MarketParams& m) {
    if (!(m.sigma > 0.0) || !(m.T > 0.0) || !(m.S0 > 0.0) || !(m.K > 0.0) || !std::isfinite(m.r)
        || !std::isfinite(m.sigma) || !std::isfinite(m.T) || !std::isfinite(m.S0) || !std::isfinite(m.K))
        throw domain_error("market parameters require sigma, T, S0, K > 0 and finite r");
}

NormalizedParams normalize(const MarketParams& m) {
    validate(m);
    NormalizedParams np;
    np.nu = 2.0 * m.r / (m.sigma * m.sigma) - 1.0;
    np.tau = m.T * m.sigma * m.sigma / 4.0;
    np.k = np.tau * m.K / m.S0;
    np.kappa = -(np.nu + 3.0) / 2.0;
    return np;
}

double parity_gap(const MarketParams& m) {
    const double x = m.r * m.T;
    // (1 - e^{-x}) / x with its removable singularity at 0
    const double f = std::abs(x) < 1e-8 ? 1.0 - x / 2.0 + x * x / 6.0 : -std::expm1(-x) / x;
    return f * m.S0 - std::exp(-x) * m.K;
}

double put_scale(const MarketParams& m) {
    return std::exp(-m.r * m.T) * 4.0 * m.S0 / (m.sigma * m.sigma * m.T);
}

int default_order(const NormalizedParams& np) { return np.tau >= 0.02 ? 64 : 200; }

double trapezoid_pmax(const NormalizedParams& np) {
    // envelope e^{pi p/4 - p^2 tau/2} below 1e-41
    const double c = 41.0 * std::log(10.0);
    const double b = pi / 4.0;
    return std::min(1000.0, (b + std::sqrt(b * b + 2.0 * np.tau * c)) / np.tau);
}

LogMagnitude continuous_integrand_log(double p, const NormalizedParams& np) {
    if (p < 0.0) throw domain_error("continuous_integrand: requires p >= 0");
    if (p == 0.0) {
        const double h = 0.5 * np.nu;
        if (!(h <= 0.0 && h == std::floor(h))) return {-INFINITY, 0.0};
        p = 1e-7;  // Gamma pole at p = 0 cancels against p sinh(pi p)
    }
    const LogMagnitude w = whittaker_w_log_mag({np.kappa, {0.0, 0.5 * p}}, 0.5 / np.k);
    const double lg = 2.0 * log_gamma_complex({0.5 * np.nu, 0.5 * p}).real();
    const double lm = log_prefactor(np) - 0.5 * p * p * np.tau + lg + std::log(p) + log_sinh(pi * p)
                      + w.log_mag;
    return {lm, w.phase};
}

double continuous_integrand(double p, const NormalizedParams& np) {
    const LogMagnitude g = continuous_integrand_log(p, np);
    if (g.log_mag == -INFINITY) return 0.0;
    return std::cos(g.phase) * exp_checked(g.log_mag);
}

// Bound-state part for nu < 0, with a = |nu| and X = 1/(2k):
//   sum_n e^{-2n(a-n)tau} (-1)^n 2(a-2n)/Gamma(1+a-n)
//         * 1/2 int_X^inf (k - 1/(2x)) x^{a-1-n} e^{-x} L_n^{(a-2n)}(x) dx
double discrete_correction(const NormalizedParams& np) {
    if (!(np.nu < 0.0)) return 0.0;
    const double a = -np.nu;
    const double X = 0.5 / np.k;
    double total = 0.0;
    for (int n = 0; n <= static_cast<int>(std::floor(a / 2.0)); ++n) {
        auto f = [&](double t) {
            const double x = X + t;
            return (np.k - 0.5 / x) * std::pow(x, a - 1.0 - n) * std::exp(-t)
                   * laguerre_poly(n, a - 2.0 * n, x);
        };
        const double scale = np.k * std::pow(X, a - 1.0 - n) * std::max(1.0, std::pow(X, n));
        const double integral = std::exp(-X) * integrate_adaptive(f, 0.0, 80.0, 1e-15 * scale).value;
        const double coef = std::exp(-2.0 * n * (a - n) * np.tau) * ((n % 2) ? -1.0 : 1.0) * 2.0
                            * (a - 2.0 * n) / std::tgamma(1.0 + a - n);
        total += coef * 0.5 * integral;
    }
    return total;
}

double price_put_normalized(const NormalizedParams& np, Method method, int n, Spectrum spectrum) {
    if (!(np.tau > 0.0) || !(np.k > 0.0)) throw domain_error("price_put_normalized: tau, k > 0");
    double cont = 0.0;
    switch (method) {
    case Method::laguerre:
        if (n < 4) throw domain_error("price_put_normalized: n >= 4 required");
        cont = laguerre_sum(np, n, nullptr);
        break;
    case Method::trapezoid:
        if (n < 4) throw domain_error("price_put_normalized: n >= 4 required");
        cont = trapezoid_sum(np, n);
        break;
    case Method::monte_carlo:
        throw domain_error("price_put_normalized: monte_carlo has no normalized quadrature");
    }
    return cont + (spectrum == Spectrum::full ? discrete_correction(np) : 0.0);
}

PriceResult price(const MarketParams& m, const PriceOptions& opt) {
    const NormalizedParams np = normalize(m);
    PriceResult res;
    res.method = opt.method;
    const double scale = put_scale(m);
    const double gap = parity_gap(m);

    if (opt.method == Method::monte_carlo) {
        McConfig cfg;
        if (opt.n > 0) cfg.paths = opt.n;
        const McEstimate put = simulate_asian(m, cfg, Payoff::put);
        res.put = put.mean;
        res.normalized_put = put.mean / scale;
        res.nodes_used = static_cast<int>(put.paths_used);
        res.diagnostics["std_error"] = put.std_error;
    } else {
        const double disc = opt.spectrum == Spectrum::full ? discrete_correction(np) : 0.0;
        double cont = 0.0;
        if (opt.method == Method::laguerre) {
            const int n = opt.n > 0 ? opt.n : default_order(np);
            if (n < 4) throw domain_error("price: n >= 4 required");
            int skipped = 0;
            cont = laguerre_sum(np, n, &skipped);
            res.nodes_used = n;
            res.diagnostics["nodes_skipped"] = skipped;
            if (opt.estimate_error) {
                const int coarse = (3 * n + 3) / 4;
                res.diagnostics["est_error"] = scale * std::abs(cont - laguerre_sum(np, coarse, nullptr));
            }
        } else {
            const int n = opt.n > 0 ? opt.n : 20000;
            if (n < 4) throw domain_error("price: n >= 4 required");
            cont = trapezoid_sum(np, n);
            res.nodes_used = n;
            res.diagnostics["p_max"] = trapezoid_pmax(np);
        }
        res.discrete_term = disc;
        res.normalized_put = cont + disc;
        res.put = scale * res.normalized_put;
        res.diagnostics["continuous_put"] = scale * cont;
    }
    res.call = res.put + gap;
    return res;
}

PriceResult price(const MarketParams& m, Method method, int n) {
    PriceOptions opt;
    opt.method = method;
    opt.n = n;
    return price(m, opt);
}

std::vector<ConvergenceRow> convergence_scan(const MarketParams& m, const std::vector<int>& n_values) {
    if (n_values.empty()) throw domain_error("convergence_scan: empty order list");
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        const PriceResult r = price(m, Method::laguerre, n);
        rows.push_back({n, r.put, r.call});
    }
    return rows;
}

std::string to_string(Method m) {
    switch (m) {
    case Method::laguerre: return "laguerre";
    case Method::trapezoid: return "trapezoid";
    case Method::monte_carlo: return "monte_carlo";
    }
    return "laguerre";
}

Method method_from_string(const std::string& s) {
    if (s == "laguerre") return Method::laguerre;
    if (s == "trapezoid") return Method::trapezoid;
    if (s == "monte_carlo" || s == "mc") return Method::monte_carlo;
    throw domain_error("unknown method: " + s);
}

} // namespace asianq
