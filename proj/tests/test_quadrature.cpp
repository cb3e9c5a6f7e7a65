#include "asianq/errors.hpp"
#include "asianq/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace asianq;

TEST(GaussLaguerre, FivePointTable) {
    // Abramowitz & Stegun 25.4.45
    const double nodes[] = {0.26356031971814, 1.41340305910652, 3.59642577104072, 7.08581000585884,
                            12.6408008442758};
    const double weights[] = {0.521755610582809, 0.398666811083176, 0.0759424496817076, 0.00361175867992205,
                              2.33699723857762e-05};
    const QuadratureRule r = gauss_laguerre_rule(5);
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(r.nodes[i], nodes[i], 1e-12 * nodes[i]);
        EXPECT_NEAR(r.weights[i], weights[i], 1e-12 * weights[i]);
    }
}

TEST(GaussLaguerre, MomentsExact) {
    for (int n : {4, 8, 16, 32, 64}) {
        const QuadratureRule r = gauss_laguerre_rule(n);
        for (int j = 0; j <= 2 * n - 1; ++j) {
            long double s = 0.0L;
            for (int i = 0; i < n; ++i) s += std::exp((long double)r.log_weights[i] + j * std::log((long double)r.nodes[i]));
            EXPECT_LT(std::abs(double(s) / std::tgamma(j + 1.0) - 1.0), 1e-11) << n << ' ' << j;
        }
    }
}

TEST(GaussLaguerre, LargeRules) {
    for (int n : {128, 200, 512}) {
        const QuadratureRule r = gauss_laguerre_rule(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            if (i) {
                EXPECT_GT(r.nodes[i], r.nodes[i - 1]);
            }
            EXPECT_NEAR(r.scaled_weights[i], std::exp(r.log_weights[i] + r.nodes[i]), 1e-12 * r.scaled_weights[i]);
            sum += r.weights[i];
        }
        EXPECT_NEAR(sum, 1.0, 1e-13) << n;
        // largest root of L_n is below 4n + 2 (Szego)
        EXPECT_LT(r.nodes.back(), 4.0 * n + 2.0);
    }
}

TEST(GaussLaguerre, Domain) {
    EXPECT_THROW(gauss_laguerre_rule(0), domain_error);
    EXPECT_THROW(gauss_laguerre_rule(513), domain_error);
}

TEST(Integrate, LaguerreScaled) {
    // int_0^inf e^{-x/3} cos x dx = (1/3) / (1/9 + 1)
    auto f = [](double x) { return std::exp(-x / 3.0) * std::cos(x); };
    const IntegrationResult r = integrate_laguerre(f, 64, 3.0);
    EXPECT_NEAR(r.value, (1.0 / 3.0) / (1.0 / 9.0 + 1.0), 1e-9);
    EXPECT_EQ(r.evaluations, 64 + 48);
    EXPECT_THROW(integrate_laguerre(f, 8, 0.0), domain_error);
}

TEST(Integrate, LaguerreRejectsNonFinite) {
    EXPECT_THROW(integrate_laguerre([](double) { return NAN; }, 8), numerical_error);
}

TEST(Integrate, Trapezoid) {
    const IntegrationResult lin = integrate_trapezoid([](double x) { return 3.0 * x - 1.0; }, 0.0, 2.0, 2);
    EXPECT_NEAR(lin.value, 4.0, 1e-15);
    const IntegrationResult s = integrate_trapezoid([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1000);
    EXPECT_NEAR(s.value, 2.0, 2e-6);
    EXPECT_GT(s.est_error, 0.0);
    EXPECT_THROW(integrate_trapezoid([](double x) { return x; }, 1.0, 0.0, 10), domain_error);
}

TEST(Integrate, AdaptiveSimpson) {
    const IntegrationResult r = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 5.0, 1e-12);
    EXPECT_NEAR(r.value, 0.5 * std::sqrt(std::numbers::pi) * std::erf(5.0), 1e-11);
    const IntegrationResult s = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
    EXPECT_NEAR(s.value, 2.0, 1e-12);
    EXPECT_GT(s.evaluations, 3);
    EXPECT_THROW(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 0.0), domain_error);
}
