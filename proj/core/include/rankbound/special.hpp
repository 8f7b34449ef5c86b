#pragma once

#include "rankbound/quadrature.hpp"

namespace rankbound {

/// Exponential integral E1(x) = int_x^inf e^{-t}/t dt for x > 0.
/// Power series below 1, continued fraction above.
double expint_e1(double x);

/// e^x * E1(x), finite for large x where E1 itself underflows.
double expint_e1_scaled(double x);

/// E(x) = int_1^inf e^{-tx} t^{-2} dt = x*Gamma(-1, x) = e^{-x} - x*E1(x), x >= 0.
/// E(0) = 1. Throws DomainError for x < 0.
double exp_e(double x);

/// e^x * E(x). Stable for large x; used wherever E is multiplied by a
/// growing exponential.
double exp_e_scaled(double x);

/// E'(x) = -E1(x) for x > 0.
double exp_e_derivative(double x);

/// E(x) by quadrature of the defining integral after t = 1/v:
/// E(x) = int_0^1 exp(-x/v) dv. Independent of the series/fraction path.
QuadResult exp_e_quadrature(double x, double tol = 1e-13);

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// int_{1/2}^inf u^{-2} exp(-(2/a - x) u) du  ==  2 E((2/a - x)/2).
/// Requires a > 0 and 2/a - x > 0.
IdentityCheck check_identity_half_line(double a, double x, double tol = 1e-12);

/// int_1^inf E(b u) e^{a u} / u du  ==  (E(b - a) - e^a E(b)) / a.
/// Requires b > a, b > 0 and a != 0.
IdentityCheck check_identity_growth(double a, double b, double tol = 1e-12);

/// E(x) == e^{-x} - x E1(x), with E from int_0^1 exp(-x/v) dv and E1 from
/// int_x^inf e^{-t}/t dt, both by quadrature. Requires x > 0.
IdentityCheck check_integration_by_parts(double x, double tol = 1e-12);

/// max of the half-line identity residual at (a, x) and the growth
/// identity residual at (a, b).
double verify_e_identities(double a, double b, double x, double tol = 1e-12);

}  // namespace rankbound
