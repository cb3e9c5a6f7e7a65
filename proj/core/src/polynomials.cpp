#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <cmath>

namespace asianq {

double laguerre_poly(int n, double alpha, double x) {
    if (n < 0) throw domain_error("laguerre_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    double lm1 = 1.0, l = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

double hermite_poly(int n, double x) {
    if (n < 0) throw domain_error("hermite_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    double hm1 = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

// y_n(x; a, b) = (-1)^n n! (x/b)^n L_n^{(1-2n-a)}(b/x)
double bessel_poly(int n, double a, double b, double x) {
    if (n < 0) throw domain_error("bessel_poly: n must be nonnegative");
    if (!(x > 0.0)) throw domain_error("bessel_poly: requires x > 0");
    if (b == 0.0) throw domain_error("bessel_poly: b must be nonzero");
    if (n == 0) return 1.0;
    const double lag = laguerre_poly(n, 1.0 - 2.0 * n - a, b / x);
    return ((n % 2) ? -1.0 : 1.0) * std::tgamma(n + 1.0) * std::pow(x / b, n) * lag;
}

} // namespace asianq
