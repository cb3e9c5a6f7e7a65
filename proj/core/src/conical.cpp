#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <cmath>
#include <complex>

namespace asianq {

// P^mu_nu(z) = ((z+1)/(z-1))^{mu/2} ((1+z)/2)^nu 2F1(-nu, -mu-nu; 1-mu; (z-1)/(z+1)) / Gamma(1-mu),
// nu = ip - 1/2. The Pfaff form keeps the series argument inside [0,1) for every z > 1.
double conical_p(double mu, double p, double z) {
    if (!(z > 1.0) || !std::isfinite(z)) throw domain_error("conical_p: requires z > 1");
    if (!(mu < 1.0)) throw domain_error("conical_p: requires mu < 1");
    using lc = std::complex<long double>;
    const lc nu(-0.5L, static_cast<long double>(p));
    const lc A = -nu;
    const lc B = -static_cast<long double>(mu) - nu;
    const long double C = 1.0L - mu;
    const long double w = (static_cast<long double>(z) - 1.0L) / (static_cast<long double>(z) + 1.0L);

    lc sum = 1.0L, term = 1.0L;
    int quiet = 0;
    int n = 0;
    for (; n < 200000; ++n) {
        const long double dn = n;
        term *= (A + dn) * (B + dn) / ((C + dn) * (dn + 1.0L)) * w;
        sum += term;
        if (std::abs(term) < 1e-19L * std::abs(sum)) {
            if (++quiet == 3) break;
        } else {
            quiet = 0;
        }
    }
    if (quiet < 3) throw convergence_error("conical_p: hypergeometric series did not converge");

    const lc pre = std::exp(nu * std::log((1.0L + static_cast<long double>(z)) / 2.0L));
    const long double ratio = std::pow((z + 1.0L) / (z - 1.0L), static_cast<long double>(mu) / 2.0L);
    const long double g = std::tgamma(1.0L - static_cast<long double>(mu));
    return static_cast<double>((ratio * pre * sum).real() / g);
}

double parabolic_d(double nu, double z) {
    if (!(z > 0.0)) throw domain_error("parabolic_d: requires z > 0");
    const double x = 0.5 * z * z;
    const LogMagnitude w = whittaker_w_log_mag({nu / 2.0 + 0.25, {0.25, 0.0}}, x);
    const double sign = std::cos(w.phase) >= 0.0 ? 1.0 : -1.0;
    return sign * std::exp(w.log_mag + 0.5 * nu * std::log(2.0) - 0.25 * std::log(x));
}

} // namespace asianq
