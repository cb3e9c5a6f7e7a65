#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

// W_{kappa,mu}(z) = e^{-z/2} z^kappa u(z), with u -> 1 as z -> inf.
// u is started from its asymptotic series at some z0 >= z and carried inward
// by Taylor steps of  z^2 u'' + (2 kappa z - z^2) u' + c u = 0,  c = (kappa-1/2)^2 - mu^2.

namespace asianq {

namespace {

struct UState {
    ComplexValue u;
    ComplexValue du;
    double log_scale = 0.0;
};

std::optional<UState> asymptotic_start(double kappa, ComplexValue mu, double z) {
    const ComplexValue a = 0.5 + mu - kappa;
    const ComplexValue b = 0.5 - mu - kappa;
    ComplexValue s = 1.0, ds = 0.0, t = 1.0;
    double tmax = 1.0, prev = 1.0;
    bool falling = false;
    for (int n = 0; n < 4000; ++n) {
        t *= (a + double(n)) * (b + double(n)) / (double(n + 1) * -z);
        const double at = std::abs(t);
        // terms may rise before they fall; a rise after the fall is the divergent tail
        if (at > prev && falling) return std::nullopt;
        if (at < prev) falling = true;
        if (at > 1e8 || at > 1e4 * std::max(1.0, std::abs(s))) return std::nullopt;
        prev = at;
        tmax = std::max(tmax, at);
        s += t;
        ds += -double(n + 1) * t / z;
        if (at <= 1e-17 * std::abs(s)) {
            if (tmax > 100.0 * std::abs(s)) return std::nullopt;
            return UState{s, ds, 0.0};
        }
    }
    return std::nullopt;
}

void taylor_step(double kappa, ComplexValue c, double z1, double h, UState& st,
                 std::vector<ComplexValue>& a) {
    a.clear();
    a.push_back(st.u);
    a.push_back(st.du);
    const double z1sq = z1 * z1;
    const double p1 = 2.0 * kappa * z1 - z1sq;
    const double p2 = 2.0 * kappa - 2.0 * z1;
    ComplexValue u = a[0] + a[1] * h;
    ComplexValue du = a[1];
    const double ref = std::abs(st.u) + std::abs(st.du) * std::abs(h);
    double hp = h;  // h^(n+1) while building term n+2
    int quiet = 0;
    for (int n = 0; n < 600; ++n) {
        const ComplexValue an = a[n];
        const ComplexValue an1 = a[n + 1];
        const ComplexValue anm1 = n >= 1 ? a[n - 1] : ComplexValue(0.0);
        const double dn = n;
        const ComplexValue num = 2.0 * z1 * (dn + 1.0) * dn * an1 + dn * (dn - 1.0) * an
                                 + p1 * (dn + 1.0) * an1 + p2 * dn * an - (dn - 1.0) * anm1
                                 + c * an;
        const ComplexValue next = -num / (z1sq * (dn + 2.0) * (dn + 1.0));
        a.push_back(next);
        du += (dn + 2.0) * next * hp;
        hp *= h;
        const ComplexValue term = next * hp;
        u += term;
        if (std::abs(term) < 1e-18 * ref && n >= 4) {
            if (++quiet == 2) break;
        } else {
            quiet = 0;
        }
    }
    st.u = u;
    st.du = du;
    const double m = std::max(std::abs(u), std::abs(du));
    if (m > 0.0 && std::isfinite(m)) {
        st.u /= m;
        st.du /= m;
        st.log_scale += std::log(m);
    }
}

UState solve_u(double kappa, ComplexValue mu, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) throw domain_error("whittaker_w: requires finite z > 0");
    if (auto direct = asymptotic_start(kappa, mu, z)) return *direct;

    const double q = std::abs(mu);
    double z0 = std::max(z * 1.25, 0.3 * (q * q + (kappa - 0.5) * (kappa - 0.5)) + 5.0);
    std::optional<UState> st;
    for (int tries = 0; tries < 200 && !(st = asymptotic_start(kappa, mu, z0)); ++tries) z0 *= 1.25;
    if (!st) throw convergence_error("whittaker_w: no asymptotic starting point found");

    const ComplexValue c = (kappa - 0.5) * (kappa - 0.5) - mu * mu;
    std::vector<ComplexValue> coef;
    coef.reserve(128);
    double z1 = z0;
    while (z1 > z) {
        double h = std::min({z1 / 3.0, 4.0, z1 - z});
        if (q > 0.0) h = std::min(h, 2.0 * z1 / q);
        taylor_step(kappa, c, z1, -h, *st, coef);
        z1 = (z1 - h <= z) ? z : z1 - h;
        if (!std::isfinite(st->u.real()) || !std::isfinite(st->u.imag()))
            throw convergence_error("whittaker_w: continuation lost finiteness");
    }
    return *st;
}

} // namespace

LogMagnitude whittaker_w_log_mag(const WhittakerIndex& idx, double z) {
    const UState st = solve_u(idx.kappa, idx.mu, z);
    const double mag = std::abs(st.u);
    if (mag == 0.0) return {-INFINITY, 0.0};
    return {-0.5 * z + idx.kappa * std::log(z) + st.log_scale + std::log(mag), std::arg(st.u)};
}

ComplexValue whittaker_w(const WhittakerIndex& idx, double z) {
    const LogMagnitude lm = whittaker_w_log_mag(idx, z);
    if (lm.log_mag > 709.0) throw overflow_error("whittaker_w: value overflows double");
    return std::polar(std::exp(lm.log_mag), lm.phase);
}

} // namespace asianq
