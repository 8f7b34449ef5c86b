#pragma once

#include "rankbound/measure.hpp"
#include "rankbound/quadrature.hpp"

namespace rankbound {

// (a, Delta) with 0 < a < 1 and 0 < Delta <= 1/2; theta = a * Delta.
class KernelParams {
public:
    KernelParams(double a, double delta);

    double a() const { return a_; }
    double delta() const { return delta_; }
    double theta() const { return a_ * delta_; }

private:
    double a_;
    double delta_;
};

// 4 pi sin((pi - 1)/2) = 4 pi cos(1/2) = 11.028...
double c_const();

// F(a, u) = (e^{-2u/a} + u e^{-u} E((2-a)u/a) - u e^{u} E((2+a)u/a)) / (c u^2),
// evaluated as e^{-2u/a}/(c u^2) * (1 + u e^y E(y)|_{(2-a)u/a} - u e^y E(y)|_{(2+a)u/a})
// so that no intermediate overflows. Requires 0 < a <= 1 and u > 0.
double big_f(double a, double u);

// K(a, x) = (2/c) { E(y) + [E(y) - e^{(x-1)/2} E(y_-)]/(x-1) - [E(y) - e^{(x+1)/2} E(y_+)]/(x+1) }
// with y = (2/a - x)/2, y_- = (2/a - 1)/2, y_+ = (2/a + 1)/2. Both quotients
// have removable singularities (at x = 1 and x = -1); within 1e-3 of them a
// third-order Taylor expansion replaces the quotient. Also equal to
// int_{1/2}^inf F(a,u) e^{xu} du. Requires 0 < a <= 1 and |x| <= 1.
double big_k(double a, double x);

// How the F(a, 1/2) * psi^(1) term of G_psi treats point masses of psi.
enum class AtomPolicy {
    // psi^(1) taken over the absolutely continuous part only; atoms enter
    // through the K-integral. Gives G(1) = 0.1535, 0.3666, 0.3321 and
    // H(0.48) = 6.498.
    continuous_transform,
    // psi^(1) over the full measure, atoms included.
    full_transform,
};

struct GValue {
    double value = 0.0;
    double err_estimate = 0.0;
    double transform_term = 0.0;  // F(a,1/2) * psi^(1)
    double kernel_term = 0.0;     // int x K(a,x) e^{x/2} dpsi
};

// G_psi(a) = F(a, 1/2) psi^(1) + int_{-1}^{1} x K(a, x) e^{x/2} dpsi(x).
GValue g_psi(double a, const Measure& psi, AtomPolicy policy = AtomPolicy::continuous_transform,
             double tol = 1e-12);

struct EquivalenceCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

// a^2/(1-a)^2 int_{1/2}^inf (F(1,u) - F(a,u)) psi^'(u + 1/2) du   versus
// a^2/(1-a)^2 int x e^{x/2} (K(1,x) - K(a,x)) dpsi(x), atoms included on
// both sides.
EquivalenceCheck transform_kernel_equivalence(double a, const Measure& psi, double tol = 1e-11);

enum class Sign { plus, minus };

struct IpmCheck {
    double closed_form = 0.0;
    double quadrature = 0.0;
    double residual = 0.0;
};

// lambda-normalised I_a^{+-}: (e^{-+u}/u) E(u (2/a -+ 1)), checked against
// e^{-+u} int_u^inf e^{-(2/a -+ 1) v} v^{-2} dv by quadrature. tol is relative once the value exceeds 1.
IpmCheck i_pm(double a, double u, Sign sign, double tol = 1e-13);

}  // namespace rankbound
