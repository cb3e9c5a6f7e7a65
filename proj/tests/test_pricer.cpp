#include "asianq/cases.hpp"
#include "asianq/errors.hpp"
#include "asianq/pricer.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

using namespace asianq;

namespace {

double call_of(int id, Spectrum s = Spectrum::full, Method m = Method::laguerre, int n = 0) {
    PriceOptions o;
    o.method = m;
    o.n = n;
    o.spectrum = s;
    return price(case_params(id), o).call;
}

} // namespace

TEST(Normalize, DerivedColumns) {
    const NormalizedParams np = normalize(case_params(2));
    EXPECT_NEAR(np.nu, 2.0 * 0.18 / 0.09 - 1.0, 1e-15);
    EXPECT_NEAR(np.tau, 0.09 / 4.0, 1e-16);
    EXPECT_NEAR(np.k, 0.0225, 1e-16);
    EXPECT_NEAR(np.kappa, -3.0, 1e-15);
    // nu = 0 when r = sigma^2 / 2
    EXPECT_NEAR(normalize({0.125, 0.5, 1.0, 2.0, 2.0}).nu, 0.0, 1e-15);
}

TEST(Normalize, CaseFiveStrikeRatio) {
    // k = tau K / S0 = 0.0625 for case 5
    EXPECT_NEAR(normalize(case_params(5)).k, 0.0625, 1e-15);
}

TEST(Validate, RejectsBadContracts) {
    EXPECT_THROW(validate({0.05, 0.0, 1.0, 2.0, 2.0}), domain_error);
    EXPECT_THROW(validate({0.05, 0.3, -1.0, 2.0, 2.0}), domain_error);
    EXPECT_THROW(validate({0.05, 0.3, 1.0, 0.0, 2.0}), domain_error);
    EXPECT_THROW(validate({NAN, 0.3, 1.0, 2.0, 2.0}), domain_error);
    EXPECT_THROW(case_params(8), domain_error);
    EXPECT_THROW(method_from_string("simpson"), domain_error);
}

TEST(Parity, GapClosedForm) {
    const MarketParams m = case_params(4);
    const double x = m.r * m.T;
    EXPECT_NEAR(parity_gap(m), (1.0 - std::exp(-x)) * m.S0 / x - std::exp(-x) * m.K, 1e-15);
    // r -> 0 limit is S0 - K
    EXPECT_NEAR(parity_gap({1e-12, 0.3, 1.0, 2.0, 1.5}), 0.5, 1e-11);
}

TEST(Parity, HoldsForAllCases) {
    for (int id = 1; id <= case_count; ++id) {
        const MarketParams m = case_params(id);
        const PriceResult r = price(m);
        EXPECT_LT(std::abs(r.call - r.put - parity_gap(m)), 1e-12) << id;
    }
}

TEST(Price, CaseTwo) {
    const auto t0 = std::chrono::steady_clock::now();
    const PriceResult r = price(case_params(2), Method::laguerre, 64);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 2.0);
    EXPECT_NEAR(r.call, 0.2183875466, 1e-6);
    EXPECT_NEAR(r.put, 0.0585969851, 1e-6);
    EXPECT_EQ(r.nodes_used, 64);
    EXPECT_EQ(r.discrete_term, 0.0);
}

TEST(Price, CaseThree) { EXPECT_NEAR(call_of(3), 0.1722687384, 1e-6); }

TEST(Price, ContinuousPartMatchesLaguerreColumn) {
    const double want[] = {0.1722687384166216, 0.1931459861530764, 0.2463981292, 0.3062092452185300,
                           0.3481391470608649};
    for (int id = 3; id <= 7; ++id) EXPECT_NEAR(call_of(id, Spectrum::continuous), want[id - 3], 1e-9) << id;
}

TEST(Price, FullSpectrumMatchesSpectralColumn) {
    const double want[] = {0.1722687410, 0.193173790, 0.246415690, 0.306220364, 0.3500952189};
    for (int id = 3; id <= 7; ++id) EXPECT_NEAR(call_of(id), want[id - 3], 2e-9) << id;
}

TEST(Price, DiscreteTermOnlyForNegativeDrift) {
    EXPECT_EQ(discrete_correction(normalize(case_params(2))), 0.0);
    EXPECT_EQ(discrete_correction(normalize({0.125, 0.5, 1.0, 2.0, 2.0})), 0.0);
    EXPECT_GT(discrete_correction(normalize(case_params(7))), 0.0);
}

TEST(Price, CaseOneAtTwoHundredNodes) {
    const auto t0 = std::chrono::steady_clock::now();
    const PriceResult r = price(case_params(1));
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
    EXPECT_EQ(r.nodes_used, 200);
    EXPECT_NEAR(r.call, 0.0559968559, 5e-4);
}

TEST(Price, CaseOneConvergedByTrapezoid) {
    // trapezoid values settle to about 3e-8 here (rounding in the large-z
    // Whittaker factor); the Laguerre rule needs far more than 200 nodes
    const double a = call_of(1, Spectrum::full, Method::trapezoid, 10000);
    EXPECT_NEAR(a, 0.05598603, 5e-8);
    EXPECT_NEAR(a, 0.0559843109, 2e-5);
    EXPECT_NEAR(call_of(1, Spectrum::full, Method::laguerre, 512), a, 2e-7);
}

TEST(Price, MethodsAgree) {
    for (int id = 2; id <= case_count; ++id) {
        const double lag = call_of(id, Spectrum::full, Method::laguerre, 128);
        const double trap = call_of(id, Spectrum::full, Method::trapezoid, 20000);
        EXPECT_LT(std::abs(lag - trap) / trap, 1e-7) << id;
    }
}

TEST(Price, StrikeMonotone) {
    MarketParams m = case_params(5);
    double prev = INFINITY;
    for (double K : {1.6, 1.8, 2.0, 2.2, 2.4}) {
        m.K = K;
        const double c = price(m).call;
        EXPECT_LT(c, prev);
        prev = c;
    }
}

TEST(Price, ErrorEstimate) {
    PriceOptions o;
    o.estimate_error = true;
    const PriceResult r = price(case_params(2), o);
    ASSERT_TRUE(r.diagnostics.count("est_error"));
    // the estimate is the error of the coarser rule, so it bounds the actual error
    EXPECT_LT(r.diagnostics.at("est_error"), 1e-6);
    EXPECT_GT(r.diagnostics.at("est_error"), std::abs(r.call - 0.2183875465955682));
}

TEST(Integrand, LogFormConsistent) {
    const NormalizedParams np = normalize(case_params(4));
    for (double p : {0.3, 2.0, 9.0}) {
        const LogMagnitude g = continuous_integrand_log(p, np);
        EXPECT_NEAR(continuous_integrand(p, np), std::exp(g.log_mag) * std::cos(g.phase),
                    1e-12 * std::exp(g.log_mag));
    }
}

TEST(Convergence, CaseTwoSettles) {
    const auto rows = convergence_scan(case_params(2), {16, 32, 64, 128});
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_LT(std::abs(rows[2].call - rows[1].call), std::abs(rows[1].call - rows[0].call));
    // the 64-point value is already converged; the 32-point one is not
    EXPECT_LT(std::abs(rows[3].call - rows[2].call), 1e-9);
    EXPECT_GT(std::abs(rows[2].call - rows[1].call), 1e-6);
}

TEST(Convergence, CaseOneNeedsManyNodes) {
    const auto rows = convergence_scan(case_params(1), {150, 200, 300, 400});
    // the low-order rules are far off; 200 sits within 2e-5 of the converged value
    EXPECT_GT(std::abs(rows[0].call - 0.05598603), 1.0);
    EXPECT_NEAR(rows[1].call, 0.05598603, 2e-5);
    EXPECT_LT(std::abs(rows[3].call - rows[2].call), std::abs(rows[1].call - rows[0].call));
}
