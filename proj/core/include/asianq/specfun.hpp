#pragma once

#include <complex>

namespace asianq {

using ComplexValue = std::complex<double>;

struct WhittakerIndex {
    double kappa = 0.0;
    ComplexValue mu{};
};

struct PolynomialSpec {
    int n = 0;
    double alpha = 0.0;
    double beta = 1.0;
};

// log|f| together with the phase of f, so that f = exp(log_mag) * exp(i*phase).
struct LogMagnitude {
    double log_mag = 0.0;
    double phase = 0.0;
};

// ---- gamma ----------------------------------------------------------------

// Principal branch of log Gamma(z). Throws pole_error at 0, -1, -2, ...
ComplexValue log_gamma_complex(ComplexValue z);

// |Gamma(sigma + i p)|^2
double gamma_abs_sq(double sigma, double p);

// ---- confluent hypergeometric ---------------------------------------------

struct KummerOptions {
    bool allow_transform = true;  // use M(a,b,z) = e^z M(b-a,b,-z) for z < 0
    int max_terms = 10000;
};

ComplexValue kummer_m(ComplexValue a, ComplexValue b, double z, const KummerOptions& opt = {});

enum class TricomiPath { automatic, integral, connection };

ComplexValue tricomi_u(ComplexValue a, ComplexValue b, double z,
                       TricomiPath path = TricomiPath::automatic);

// ---- Whittaker -------------------------------------------------------------

ComplexValue whittaker_w(const WhittakerIndex& idx, double z);
LogMagnitude whittaker_w_log_mag(const WhittakerIndex& idx, double z);

// ---- Bessel ----------------------------------------------------------------

// K_{ip}(x) for real p, x > 0. Underflows to 0 for very large x or p.
double bessel_k_imag(double p, double x, bool* underflow = nullptr);

// K_{ip}(x) = exp(-log_scale) * value, with log_scale chosen to keep value O(1)
// for large p.
struct ScaledValue {
    double value = 0.0;
    double log_scale = 0.0;
};
ScaledValue bessel_k_imag_scaled(double p, double x);

// K_lambda(x) for real order.
double bessel_k_real(double lambda, double x);

// ---- conical / parabolic cylinder -----------------------------------------

// P^mu_{ip-1/2}(z), z > 1, mu < 1.
double conical_p(double mu, double p, double z);

// D_nu(z), z > 0.
double parabolic_d(double nu, double z);

// ---- polynomials -----------------------------------------------------------

double laguerre_poly(int n, double alpha, double x);
double hermite_poly(int n, double x);
double bessel_poly(int n, double a, double b, double x);

} // namespace asianq
