#include "rankbound/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rankbound/errors.hpp"

namespace rankbound {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// E1 by its convergent series; accurate for 0 < x < 1.
double e1_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= -x / n;
        const double add = term / n;
        sum += add;
        if (std::fabs(add) < kEps * std::fabs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

// e^x E_n(x) by the modified Lentz continued fraction; x >= 1.
double en_scaled_fraction(int n, double x) {
    constexpr double tiny = 1e-300;
    double b = x + n;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (n - 1 + i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    return h;
}

double e1_scaled_fraction(double x) { return en_scaled_fraction(1, x); }

}  // namespace

double expint_e1(double x) {
    if (!(x > 0.0)) throw DomainError("expint_e1 requires x > 0");
    if (x < 1.0) return e1_series(x);
    return std::exp(-x) * e1_scaled_fraction(x);
}

double expint_e1_scaled(double x) {
    if (!(x > 0.0)) throw DomainError("expint_e1_scaled requires x > 0");
    if (x < 1.0) return std::exp(x) * e1_series(x);
    return e1_scaled_fraction(x);
}

double exp_e_scaled(double x) {
    if (x < 0.0 || std::isnan(x)) throw DomainError("E(x) requires x >= 0 (the defining integral diverges)");
    if (x == 0.0) return 1.0;
    if (x < 1.0) return 1.0 - x * std::exp(x) * e1_series(x);
    // Direct fraction for E_2; 1 - x e^x E1(x) cancels for large x.
    return en_scaled_fraction(2, x);
}

double exp_e(double x) {
    if (x < 0.0 || std::isnan(x)) throw DomainError("E(x) requires x >= 0 (the defining integral diverges)");
    if (x == 0.0) return 1.0;
    if (x < 1.0) return std::exp(-x) - x * e1_series(x);
    return std::exp(-x) * exp_e_scaled(x);
}

double exp_e_derivative(double x) { return -expint_e1(x); }

QuadResult exp_e_quadrature(double x, double tol) {
    if (x < 0.0 || std::isnan(x)) throw DomainError("E(x) requires x >= 0");
    auto f = [x](double v) { return v > 0.0 ? std::exp(-x / v) : 0.0; };
    return integrate(f, IntegrationDomain::finite(0.0, 1.0), tol);
}

IdentityCheck check_integration_by_parts(double x, double tol) {
    if (!(x > 0.0)) throw DomainError("integration-by-parts identity requires x > 0");
    auto f = [](double t) { return std::exp(-t) / t; };
    const double e1 = integrate(f, IntegrationDomain::semi_infinite(x, 1.0), tol).value;
    IdentityCheck out;
    out.lhs = exp_e_quadrature(x, tol).value;
    out.rhs = std::exp(-x) - x * e1;
    out.residual = std::fabs(out.lhs - out.rhs);
    return out;
}

IdentityCheck check_identity_half_line(double a, double x, double tol) {
    if (!(a > 0.0)) throw DomainError("half-line identity requires a > 0");
    const double k = 2.0 / a - x;
    if (!(k > 0.0)) throw DomainError("half-line identity requires 2/a - x > 0");
    auto f = [k](double u) { return std::exp(-k * u) / (u * u); };
    const QuadResult q = integrate(f, IntegrationDomain::semi_infinite(0.5, 1.0 / k), tol);
    IdentityCheck out;
    out.lhs = q.value;
    out.rhs = 2.0 * exp_e(0.5 * k);
    out.residual = std::fabs(out.lhs - out.rhs);
    return out;
}

IdentityCheck check_identity_growth(double a, double b, double tol) {
    if (!(b > a) || !(b > 0.0) || a == 0.0)
        throw DomainError("growth identity requires b > a, b > 0 and a != 0");
    // E(bu) e^{au} = e^{-(b-a)u} * [e^{bu} E(bu)]; keep the decaying factor explicit.
    auto f = [a, b](double u) { return std::exp(-(b - a) * u) * exp_e_scaled(b * u) / u; };
    const QuadResult q =
        integrate(f, IntegrationDomain::semi_infinite(1.0, 1.0 / (b - a)), tol);
    IdentityCheck out;
    out.lhs = q.value;
    out.rhs = (exp_e(b - a) - std::exp(a) * exp_e(b)) / a;
    out.residual = std::fabs(out.lhs - out.rhs);
    return out;
}

double verify_e_identities(double a, double b, double x, double tol) {
    return std::max(check_identity_half_line(a, x, tol).residual, check_identity_growth(a, b, tol).residual);
}

}  // namespace rankbound
