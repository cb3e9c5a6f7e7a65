#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace asianq {

namespace {

using boost::math::quadrature::gauss_kronrod;

struct Panel {
    double a, b, value, err, l1;
};

constexpr double eps = std::numeric_limits<double>::epsilon();

template <class F>
double refine(F& f, const Panel& pn, double tol, int depth) {
    // error estimates below the rounding level of the panel carry no information
    if (pn.err <= std::max(tol, 1e3 * eps * pn.l1) || depth == 0) return pn.value;
    const double m = 0.5 * (pn.a + pn.b);
    Panel l{pn.a, m, 0, 0, 0}, r{m, pn.b, 0, 0, 0};
    l.value = gauss_kronrod<double, 21>::integrate(f, l.a, l.b, 0, 0.0, &l.err, &l.l1);
    r.value = gauss_kronrod<double, 21>::integrate(f, r.a, r.b, 0, 0.0, &r.err, &r.l1);
    return refine(f, l, 0.5 * tol, depth - 1) + refine(f, r, 0.5 * tol, depth - 1);
}

// integrate f over [0, smax] on panels no wider than one radian of phase;
// panels are refined against an absolute tolerance taken from the L1 norm of f
template <class F, class Rate>
double panel_integral(F&& f, double smax, Rate&& rate) {
    std::vector<Panel> panels;
    double s = 0.0, l1 = 0.0;
    while (s < smax) {
        double w = std::min(0.5, 1.0 / (rate(s) + 1e-300));
        w = std::max(w, 1e-6);
        const double e = std::min(s + w, smax);
        double err = 0.0, pl1 = 0.0;
        const double v = gauss_kronrod<double, 21>::integrate(f, s, e, 0, 0.0, &err, &pl1);
        panels.push_back({s, e, v, err, pl1});
        l1 += pl1;
        s = e;
    }
    double sum = 0.0;
    for (const Panel& pn : panels) {
        sum += refine(f, pn, 1e-15 * l1 * (pn.b - pn.a) / smax, 6);
    }
    return sum;
}

// K_{ip}(x) = -pi Im I_{ip}(x) / sinh(pi p),
// I_{ip}(x) = (x/2)^{ip} / Gamma(1+ip) * sum_k (x^2/4)^k / (k! (1+ip)_k)
ScaledValue k_imag_series(double p, double x) {
    const ComplexValue a(1.0, p);
    const double q = 0.25 * x * x;
    ComplexValue sum = 1.0, term = 1.0;
    for (int k = 0; k < 10000; ++k) {
        term *= q / ((k + 1.0) * (a + double(k)));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            const ComplexValue lg = log_gamma_complex(a);
            const ComplexValue ph = std::polar(1.0, p * std::log(0.5 * x) - lg.imag());
            const double log_sinh = std::numbers::pi * p + std::log1p(-std::exp(-2.0 * std::numbers::pi * p))
                                    - std::numbers::ln2;
            return {-std::numbers::pi * (ph * sum).imag(), lg.real() + log_sinh};
        }
    }
    throw convergence_error("bessel_k_imag: series did not converge");
}

} // namespace

// K_{ip}(x) = e^{-p theta} int_0^inf e^{-x cos(theta) cosh s} cos(p s - x sin(theta) sinh s) ds
// (the ray t = s + i theta), which removes the e^{-pi p/2} cancellation of the real-axis form.
ScaledValue bessel_k_imag_scaled(double p, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("bessel_k_imag: requires x > 0");
    p = std::abs(p);
    // the contour below oscillates through ~45 tan(theta) radians, which grows with p/x
    if (p >= 0.5 && p >= 0.9 * x && x * x <= 60.0 * p) return k_imag_series(p, x);
    double theta = 0.0;
    if (p > 0.0) {
        const double delta = std::min(1.0, 3.0 / p);
        theta = std::min(std::asin(std::min(p / x, 1.0)), std::numbers::pi / 2 - delta);
    }
    const double xc = x * std::cos(theta);
    const double xs = x * std::sin(theta);
    const double smax = std::acosh(1.0 + 45.0 / xc);
    auto f = [&](double s) {
        return std::exp(-xc * (std::cosh(s) - 1.0)) * std::cos(p * s - xs * std::sinh(s));
    };
    // phase slope plus the curvature scale near the stationary point
    auto rate = [&](double s) {
        return std::abs(p - xs * std::cosh(s)) + std::sqrt(xs * std::sinh(s)) + 1.0;
    };
    const double v = panel_integral(f, smax, rate);
    return {v, p * theta + xc};
}

double bessel_k_imag(double p, double x, bool* underflow) {
    const ScaledValue sv = bessel_k_imag_scaled(p, x);
    const double r = sv.value == 0.0 ? 0.0 : std::exp(std::log(std::abs(sv.value)) - sv.log_scale);
    const bool uf = sv.value != 0.0 && r == 0.0;
    if (underflow) *underflow = uf;
    return std::copysign(r, sv.value);
}

double bessel_k_real(double lambda, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("bessel_k_real: requires x > 0");
    lambda = std::abs(lambda);
    // e^{-x} int_0^inf e^{-x (cosh t - 1)} cosh(lambda t) dt
    double tmax = 1.0;
    while (x * (std::cosh(tmax) - 1.0) - lambda * tmax < 45.0) tmax += 0.5;
    auto f = [&](double t) {
        return std::exp(-x * (std::cosh(t) - 1.0) + lambda * t) * 0.5
               * (1.0 + std::exp(-2.0 * lambda * t));
    };
    auto rate = [&](double) { return 2.0; };
    return std::exp(-x) * panel_integral(f, tmax, rate);
}

} // namespace asianq
