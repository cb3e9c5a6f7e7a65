#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace asianq {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

ComplexValue lanczos_log_gamma(ComplexValue z) {
    z -= 1.0;
    ComplexValue x = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i)
        x += lanczos_coef[i] / (z + static_cast<double>(i));
    const ComplexValue t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log(1 - w) with the small-|w| branch summed directly
ComplexValue log1m(ComplexValue w) {
    if (std::abs(w) < 1e-3) {
        ComplexValue s = 0.0, wk = w;
        for (int k = 1; k <= 8; ++k) {
            s -= wk / static_cast<double>(k);
            wk *= w;
        }
        return s;
    }
    return std::log(1.0 - w);
}

} // namespace

ComplexValue log_gamma_complex(ComplexValue z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("log_gamma_complex: non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error("log_gamma_complex: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma(z);

    // reflection, written for Im z >= 0 so that exp(2 pi i z) stays bounded
    const bool lower = z.imag() < 0.0;
    const ComplexValue zu = lower ? std::conj(z) : z;
    const ComplexValue i(0.0, 1.0);
    const double pi = std::numbers::pi;
    ComplexValue r = std::log(2.0 * pi) + i * pi * (zu - 0.5)
                     - log1m(std::exp(2.0 * pi * i * zu))
                     - lanczos_log_gamma(1.0 - zu);
    return lower ? std::conj(r) : r;
}

double gamma_abs_sq(double sigma, double p) {
    return std::exp(2.0 * log_gamma_complex({sigma, p}).real());
}

} // namespace asianq
