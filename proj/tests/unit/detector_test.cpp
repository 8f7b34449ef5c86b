#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "rankbound/detector.hpp"
#include "rankbound/errors.hpp"
#include "rankbound/kernels.hpp"
#include "rankbound/testfn.hpp"

using namespace rankbound;

TEST(SyntheticH, ZerosAreZeros) {
    const SyntheticH h(std::exp(0.8), 2.0);
    const auto zs = h.zeros_between(-10.0, 10.0);
    ASSERT_EQ(zs.size(), 7u);  // spacing pi
    for (const auto& z : zs) {
        EXPECT_NEAR(z.real(), 0.4, 1e-15);
        EXPECT_LT(std::abs(h(z)), 1e-13);
    }
    EXPECT_TRUE(SyntheticH(0.0, 1.0).zeros_between(-5, 5).empty());
    EXPECT_THROW(SyntheticH(-1.0, 1.0), DomainError);
    EXPECT_THROW(SyntheticH(1.0, 0.0), DomainError);
}

TEST(SyntheticH, LogAbsMatchesDirectAndSeries) {
    const SyntheticH h(3.0, 1.5);
    for (double re : {-0.5, 0.3, 1.0, 2.0})
        for (double im : {-1.0, 0.2, 2.9}) {
            const std::complex<double> s(re, im);
            EXPECT_NEAR(h.log_abs(s), std::log(std::abs(h(s))), 1e-13) << s;
        }
    // Far right: log|1 - w| = -Re w - Re(w^2)/2 + O(w^3).
    const std::complex<double> s(30.0, 0.7);
    const std::complex<double> w = 3.0 * std::exp(-1.5 * s);
    EXPECT_NEAR(h.log_abs(s), -w.real() - 0.5 * (w * w).real(), 1e-30);
    EXPECT_NE(h.log_abs(s), 0.0);
}

TEST(ZeroCount, ConstantOneIsTrivial) {
    const ZeroCountCheck r = zero_count_identity(SyntheticH(0.0, 1.0), {0.0, -1.0, 1.0});
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 0.0);
    EXPECT_EQ(r.residual, 0.0);
    EXPECT_EQ(r.zeros_inside, 0);
}

TEST(ZeroCount, SinglePlantedZero) {
    const double beta = 2.5, beta0 = 0.7, sigma_p = 0.1, t1 = -0.8, t2 = 1.6;
    const double L = t2 - t1;
    const ZeroCountCheck r = zero_count_identity(SyntheticH(std::exp(beta * beta0), beta), {sigma_p, t1, t2});
    const double expected = 2.0 * L * std::sin(std::numbers::pi * (0.0 - t1) / L) *
                            std::sinh(std::numbers::pi * (beta0 - sigma_p) / L);
    EXPECT_EQ(r.zeros_inside, 1);
    EXPECT_NEAR(r.lhs, expected, 1e-14);
    EXPECT_NEAR(r.rhs, expected, 1e-8);
}

TEST(ZeroCount, ZerosLeftOfLineCountNothing) {
    const ZeroCountCheck r = zero_count_identity(SyntheticH(std::exp(2.0 * -0.3), 2.0), {0.0, -1.0, 1.5});
    EXPECT_EQ(r.zeros_inside, 0);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_LT(std::fabs(r.rhs), 1e-9);
}

TEST(ZeroCount, RandomisedFamily) {
    const auto cases = random_detector_cases(0xC0FFEEu, 64);
    ASSERT_EQ(cases.size(), 64u);
    int seen[4] = {0, 0, 0, 0};
    for (const auto& c : cases) {
        ASSERT_GE(c.planted, 0);
        ASSERT_LE(c.planted, 3);
        ++seen[c.planted];
        EXPECT_GT(c.h.beta(), std::numbers::pi / c.box.height());
        const ZeroCountCheck r = zero_count_identity(c.h, c.box);
        EXPECT_EQ(r.zeros_inside, c.planted);
        EXPECT_LT(r.residual, 1e-6) << "beta " << c.h.beta() << " c0 " << c.h.c0();
    }
    for (int n = 0; n < 4; ++n) EXPECT_GT(seen[n], 0) << n;
}

TEST(ZeroCount, SameSeedSameCases) {
    const auto a = random_detector_cases(7, 10);
    const auto b = random_detector_cases(7, 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].h.c0(), b[i].h.c0());
        EXPECT_EQ(a[i].box.t1, b[i].box.t1);
    }
}

TEST(ZeroCount, BoundaryZeroRejected) {
    const double beta = 3.0;
    const SyntheticH h(std::exp(beta * 0.5), beta);
    const double gamma = 2.0 * std::numbers::pi / beta;
    EXPECT_THROW(zero_count_identity(h, {0.2, gamma, gamma + 1.5}), DomainError);
    EXPECT_THROW(zero_count_identity(h, {0.2, gamma - 1.5, gamma}), DomainError);
    EXPECT_THROW(zero_count_identity(h, {0.5, -0.5, 0.5}), DomainError);
}

TEST(ZeroCount, SlowDecayRejected) {
    // beta must exceed pi/(t2 - t1).
    EXPECT_THROW(zero_count_identity(SyntheticH(2.0, 1.0), {0.0, 0.1, 0.1 + std::numbers::pi}), DomainError);
    EXPECT_THROW(zero_count_identity(SyntheticH(2.0, 1.0), {0.0, 1.0, 1.0}), DomainError);
}

TEST(DetectorWeight, AtLeastOneOnTheBox) {
    double min_w = INFINITY;
    for (double lambda : {0.25, 1.0, 3.0})
        for (int i = 0; i <= 30; ++i)
            for (int j = 0; j <= 30; ++j) {
                const double sigma = 0.2, t1 = -0.4;
                const std::complex<double> rho(sigma + 3.0 * i / (30.0 * lambda), t1 + j / (30.0 * lambda));
                const double w = detector_weight(lambda, sigma, t1, rho);
                EXPECT_GE(w, 1.0);
                min_w = std::min(min_w, w);
            }
    EXPECT_NEAR(min_w, 2.0 * std::sinh(0.5), 1e-12);
    EXPECT_THROW(detector_weight(0.0, 0.0, 0.0, {0.0, 0.0}), DomainError);
}

TEST(MainTermFunctions, DensityAndZeroCountBound) {
    for (double a : {0.2, 0.48, 0.8})
        for (double u : {0.5, 1.0, 3.0, 10.0}) EXPECT_GE(density_main_term(a, u), -1e-12);
    const double a = 0.48;
    const double expected = a * a / ((1.0 - a) * (1.0 - a)) *
                            (g_psi(1.0, limit_measure(2)).value - g_psi(a, limit_measure(2)).value);
    EXPECT_NEAR(zt_bound(a, limit_measure(2)), expected, 1e-14);
    EXPECT_GT(zt_bound(a, limit_measure(0)), 0.0);
    EXPECT_THROW(density_main_term(1.0, 1.0), DomainError);
    EXPECT_THROW(zt_bound(0.0, limit_measure(0)), DomainError);
}
