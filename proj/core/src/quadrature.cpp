#include "asianq/quadrature.hpp"
#include "asianq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asianq {

namespace {

// L_n(x) and L_{n-1}(x) divided by exp(log_scale)
struct LaguerrePair {
    long double ln = 1.0L;
    long double lnm1 = 0.0L;
    long double log_scale = 0.0L;
};

LaguerrePair laguerre_pair(int n, long double x) {
    LaguerrePair r;
    long double lm1 = 0.0L, l = 1.0L;
    for (int k = 0; k < n; ++k) {
        const long double next = ((2.0L * k + 1.0L - x) * l - k * lm1) / (k + 1.0L);
        lm1 = l;
        l = next;
        const long double m = std::fabs(l);
        if (m > 1e150L) {
            l /= m;
            lm1 /= m;
            r.log_scale += std::log(m);
        }
    }
    r.ln = l;
    r.lnm1 = lm1;
    return r;
}

double checked(double v) {
    if (!std::isfinite(v)) throw numerical_error("integrand returned a non-finite value");
    return v;
}

} // namespace

QuadratureRule gauss_laguerre_rule(int n) {
    if (n < 1 || n > 512) throw domain_error("gauss_laguerre_rule: n must be in [1, 512]");
    QuadratureRule rule;
    rule.n = n;
    rule.nodes.resize(n);
    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            const long double ai = i - 1;
            z += (1.0L + 2.55L * ai) / (1.9L * ai) * (z - rule.nodes[i - 2]);
        }
        const long double lo = i ? rule.nodes[i - 1] : 0.0L;
        long double prev = INFINITY;
        for (int it = 0;; ++it) {
            if (it == 100) throw convergence_error("gauss_laguerre_rule: Newton iteration failed");
            const LaguerrePair lp = laguerre_pair(n, z);
            // L_n' = n (L_n - L_{n-1}) / x
            long double zn = z - z * lp.ln / (n * (lp.ln - lp.lnm1));
            if (zn <= lo) zn = 0.5L * (z + lo);
            const long double step = std::fabs(zn - z);
            z = zn;
            if (step <= 4.0L * std::numeric_limits<long double>::epsilon() * z) break;
            // at rounding level the steps stop shrinking
            if (step < 1e-14L * z && step >= 0.5L * prev) break;
            prev = step;
        }
        if (i > 0 && !(z > lo * (1.0L + 1e-12L)))
            throw convergence_error("gauss_laguerre_rule: root sequence not increasing");
        rule.nodes[i] = static_cast<double>(z);
    }

    rule.weights.resize(n);
    rule.log_weights.resize(n);
    rule.scaled_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[i];
        const LaguerrePair lp = laguerre_pair(n, x);
        // at a root, L_{n+1}(x) = -n L_{n-1}(x) / (n+1)
        const long double log_ln1 = std::log(n * std::fabs(lp.lnm1) / (n + 1.0L)) + lp.log_scale;
        const double lw = static_cast<double>(std::log(static_cast<long double>(x))
                                              - 2.0L * std::log(n + 1.0L) - 2.0L * log_ln1);
        rule.log_weights[i] = lw;
        rule.weights[i] = std::exp(lw);
        rule.scaled_weights[i] = std::exp(lw + x);
    }
    return rule;
}

IntegrationResult integrate_laguerre(const RealFunction& f, int n, double s) {
    if (!(s > 0.0)) throw domain_error("integrate_laguerre: scale must be positive");
    auto sum_rule = [&](int order) {
        const QuadratureRule rule = gauss_laguerre_rule(order);
        double acc = 0.0;
        for (int i = 0; i < order; ++i)
            acc += rule.scaled_weights[i] * checked(f(s * rule.nodes[i]));
        return s * acc;
    };
    IntegrationResult r;
    r.value = sum_rule(n);
    r.evaluations = n;
    const int coarse = (3 * n + 3) / 4;
    if (coarse < n) {
        r.est_error = std::abs(r.value - sum_rule(coarse));
        r.evaluations += coarse;
    }
    return r;
}

IntegrationResult integrate_trapezoid(const RealFunction& f, double a, double b, int n) {
    if (!(a < b)) throw domain_error("integrate_trapezoid: requires a < b");
    if (n < 2) throw domain_error("integrate_trapezoid: requires n >= 2");
    const double h = (b - a) / n;
    double even = 0.5 * (checked(f(a)) + checked(f(b)));
    double odd = 0.0;
    for (int i = 1; i < n; ++i) {
        const double v = checked(f(a + i * h));
        (i % 2 ? odd : even) += v;
    }
    IntegrationResult r;
    r.value = h * (even + odd);
    r.evaluations = n + 1;
    if (n % 2 == 0) r.est_error = std::abs(r.value - 2.0 * h * even) / 3.0;
    return r;
}

namespace {

struct SimpsonState {
    const RealFunction& f;
    long evals = 0;
    double err = 0.0;
};

double simpson_recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    if (!(lm > a && rm < b && m > lm && rm > m)) {
        // interval no longer resolvable in double precision
        return whole;
    }
    if (depth > 60) throw convergence_error("integrate_adaptive: maximum depth exceeded");
    const double flm = checked(st.f(lm)), frm = checked(st.f(rm));
    st.evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        st.err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
           + simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

// an infinite endpoint value marks an integrable singularity; its weight is dropped
double endpoint_value(const RealFunction& f, double x) {
    const double v = f(x);
    if (std::isinf(v)) return 0.0;
    return checked(v);
}

} // namespace

IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b, double tol) {
    if (!(a < b)) throw domain_error("integrate_adaptive: requires a < b");
    if (!(tol > 0.0)) throw domain_error("integrate_adaptive: requires tol > 0");
    SimpsonState st{f};
    const double fa = endpoint_value(f, a), fb = endpoint_value(f, b);
    const double m = 0.5 * (a + b);
    const double fm = checked(f(m));
    st.evals = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    IntegrationResult r;
    r.value = simpson_recurse(st, a, b, fa, fm, fb, whole, tol, 0);
    r.est_error = st.err;
    r.evaluations = st.evals;
    return r;
}

} // namespace asianq
