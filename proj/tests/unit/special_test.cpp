#include <cmath>

#include <boost/math/special_functions/expint.hpp>
#include <gtest/gtest.h>

#include "rankbound/errors.hpp"
#include "rankbound/special.hpp"

using namespace rankbound;

namespace {

double e2_oracle(double x) { return boost::math::expint(2, x); }

}  // namespace

TEST(ExpE, AtZeroIsOne) { EXPECT_DOUBLE_EQ(exp_e(0.0), 1.0); }

TEST(ExpE, AtOneMatchesDefiningIntegral) {
    EXPECT_NEAR(exp_e(1.0), 0.14850, 1e-5);
    EXPECT_NEAR(exp_e(1.0), exp_e_quadrature(1.0).value, 1e-10);
}

TEST(ExpE, AtTenBelowExpMinusTen) {
    const double v = exp_e(10.0);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, std::exp(-10.0));
}

TEST(ExpE, NegativeArgumentRejected) {
    EXPECT_THROW(exp_e(-1e-3), DomainError);
    EXPECT_THROW(exp_e_quadrature(-1.0), DomainError);
}

TEST(ExpE, AgreesWithBoostAndQuadratureOnLogGrid) {
    for (int i = 0; i <= 60; ++i) {
        const double x = std::pow(10.0, -6.0 + i * (std::log10(50.0) + 6.0) / 60.0);
        const double v = exp_e(x);
        EXPECT_NEAR(v, exp_e_quadrature(x).value, 1e-10) << "x = " << x;
        EXPECT_NEAR(v, e2_oracle(x), 1e-14 + 1e-13 * v) << "x = " << x;
        EXPECT_NEAR(expint_e1(x), boost::math::expint(1, x), 1e-13 * boost::math::expint(1, x)) << "x = " << x;
    }
}

TEST(ExpE, ScaledFormsConsistent) {
    for (double x : {1e-4, 0.3, 0.999, 1.0, 1.001, 7.0, 40.0, 300.0}) {
        EXPECT_NEAR(exp_e_scaled(x), std::exp(x) * e2_oracle(x), 1e-13 * exp_e_scaled(x)) << x;
        if (x < 600.0)
            EXPECT_NEAR(expint_e1_scaled(x), std::exp(x) * boost::math::expint(1, x), 1e-13 * expint_e1_scaled(x)) << x;
    }
    // Large argument: e^x E(x) ~ 1/x - 2/x^2 + 6/x^3.
    const double big = 1e6;
    EXPECT_NEAR(exp_e_scaled(big), 1.0 / big - 2.0 / (big * big) + 6.0 / (big * big * big), 1e-15 / big);
}

TEST(ExpE, StrictlyDecreasing) {
    double prev = exp_e(0.0);
    for (int i = 1; i <= 400; ++i) {
        const double x = 0.05 * i;
        const double v = exp_e(x);
        EXPECT_LT(v, prev) << x;
        prev = v;
    }
}

TEST(ExpE, DerivativeIsMinusE1) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 12.0}) {
        const double h = 1e-5 * x;
        const double fd = (exp_e(x + h) - exp_e(x - h)) / (2.0 * h);
        EXPECT_NEAR(exp_e_derivative(x), fd, 1e-8 * std::max(1.0, std::fabs(fd))) << x;
    }
}

TEST(EIdentities, IntegrationByParts) {
    for (double x : {1e-6, 1e-3, 0.1, 1.0, 2.5, 10.0, 30.0}) {
        EXPECT_LT(check_integration_by_parts(x).residual, 1e-10) << x;
    }
    EXPECT_THROW(check_integration_by_parts(0.0), DomainError);
}

TEST(EIdentities, HalfLineExamples) {
    EXPECT_LT(check_identity_half_line(1.0, 0.0).residual, 1e-8);
    EXPECT_LT(check_identity_half_line(0.48, 0.99).residual, 1e-8);
    EXPECT_THROW(check_identity_half_line(1.0, 2.0), DomainError);
    EXPECT_THROW(check_identity_half_line(0.0, 0.0), DomainError);
}

TEST(EIdentities, GrowthExamples) {
    EXPECT_LT(check_identity_growth(1.0, 2.0).residual, 1e-8);
    EXPECT_LT(check_identity_growth(-0.7, 0.4).residual, 1e-8);
    EXPECT_THROW(check_identity_growth(2.0, 1.0), DomainError);
    EXPECT_THROW(check_identity_growth(0.0, 1.0), DomainError);
}

TEST(EIdentities, GridProperty) {
    for (double a : {0.2, 0.48, 0.75, 1.0})
        for (double x : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
            const double b = 2.0 / a + 0.5;
            EXPECT_LT(verify_e_identities(a, b, x), 1e-8) << a << " " << x;
        }
}
