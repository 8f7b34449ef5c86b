#include "rankbound/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rankbound/errors.hpp"
#include "rankbound/special.hpp"
#include "rankbound/testfn.hpp"

namespace rankbound {
namespace {

constexpr double kPoleWindow = 1e-3;

void require_kernel_a(double a, const char* who) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError(std::string(who) + ": a must lie in (0, 1]");
}

// (E(y0 - h/2) - e^{h/2} E(y0)) / h, removable at h = 0.
double pole_quotient(double y0, double h) {
    if (std::fabs(h) >= kPoleWindow) return (exp_e(y0 - 0.5 * h) - std::exp(0.5 * h) * exp_e(y0)) / h;
    // N(h) = E(y0 - h/2) - e^{h/2} E(y0); N(0) = 0.
    // E' = -E1, E'' = e^{-y}/y, E''' = -e^{-y}(1/y + 1/y^2).
    const double e = exp_e(y0);
    const double ey = std::exp(-y0);
    const double n1 = 0.5 * (expint_e1(y0) - e);
    const double n2 = 0.25 * (ey / y0 - e);
    const double n3 = 0.125 * (ey * (1.0 / y0 + 1.0 / (y0 * y0)) - e);
    return n1 + 0.5 * n2 * h + n3 * h * h / 6.0;
}

}  // namespace

KernelParams::KernelParams(double a, double delta) : a_(a), delta_(delta) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("KernelParams: a must lie in the open interval (0, 1)");
    if (!(delta > 0.0 && delta <= 0.5)) throw DomainError("KernelParams: Delta must lie in (0, 1/2]");
}

double c_const() { return 4.0 * std::numbers::pi * std::sin((std::numbers::pi - 1.0) / 2.0); }

double big_f(double a, double u) {
    require_kernel_a(a, "big_f");
    if (!(u > 0.0)) throw DomainError("big_f: u must be positive");
    const double lo = (2.0 - a) / a * u;
    const double hi = (2.0 + a) / a * u;
    const double bracket = 1.0 + u * exp_e_scaled(lo) - u * exp_e_scaled(hi);
    return std::exp(-2.0 * u / a) * bracket / (c_const() * u * u);
}

double big_k(double a, double x) {
    require_kernel_a(a, "big_k");
    if (!(std::fabs(x) <= 1.0)) throw DomainError("big_k: x must lie in [-1, 1]");
    const double y = 0.5 * (2.0 / a - x);
    const double y_minus = 0.5 * (2.0 / a - 1.0);
    const double y_plus = 0.5 * (2.0 / a + 1.0);
    const double value = exp_e(y) + pole_quotient(y_minus, x - 1.0) - pole_quotient(y_plus, x + 1.0);
    return 2.0 / c_const() * value;
}

GValue g_psi(double a, const Measure& psi, AtomPolicy policy, double tol) {
    require_kernel_a(a, "g_psi");
    if (psi.density().support_lo() < -1.0 || psi.density().support_hi() > 1.0)
        throw DomainError("g_psi: psi must be supported in [-1, 1]");
    const QuadResult transform =
        policy == AtomPolicy::continuous_transform ? laplace(psi.continuous_part(), 1.0, tol) : laplace(psi, 1.0, tol);
    const QuadResult kernel =
        integrate_measure([a](double x) { return x * big_k(a, x) * std::exp(0.5 * x); }, psi, tol);
    GValue g;
    g.transform_term = big_f(a, 0.5) * transform.value;
    g.kernel_term = kernel.value;
    g.value = g.transform_term + g.kernel_term;
    g.err_estimate = big_f(a, 0.5) * transform.err_estimate + kernel.err_estimate;
    return g;
}

EquivalenceCheck transform_kernel_equivalence(double a, const Measure& psi, double tol) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("transform_kernel_equivalence: a must lie in (0, 1)");
    const double pref = a * a / ((1.0 - a) * (1.0 - a));
    auto outer = [&](double u) {
        const double diff = big_f(1.0, u) - big_f(a, u);
        if (diff == 0.0) return 0.0;
        // The transform grows like e^u while diff decays like e^{-2u}; ask the
        // inner integral for what the product needs, not an absolute 1e-12.
        const double inner_tol = std::max(0.01 * tol / std::fabs(diff), 1e-14 * std::exp(u + 0.5));
        return diff * laplace_derivative(psi, u + 0.5, inner_tol).value;
    };
    const QuadResult lhs = integrate(outer, IntegrationDomain::semi_infinite(0.5, 1.0), tol);
    const QuadResult rhs = integrate_measure(
        [a](double x) { return x * std::exp(0.5 * x) * (big_k(1.0, x) - big_k(a, x)); }, psi, tol);
    EquivalenceCheck out;
    out.lhs = pref * lhs.value;
    out.rhs = pref * rhs.value;
    out.residual = std::fabs(out.lhs - out.rhs);
    return out;
}

IpmCheck i_pm(double a, double u, Sign sign, double tol) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("i_pm: a must lie in (0, 1)");
    if (!(u > 0.0)) throw DomainError("i_pm: u must be positive");
    const double s = sign == Sign::plus ? 1.0 : -1.0;
    const double k = 2.0 / a - s;
    // e^{-s u} E(k u) / u = e^{-(s + k) u} [e^{ku} E(ku)] / u
    IpmCheck out;
    out.closed_form = std::exp(-(s + k) * u) * exp_e_scaled(k * u) / u;
    auto f = [k, s, u](double v) { return std::exp(-s * u - k * v) / (v * v); };
    const double scaled_tol = tol * std::max(1.0, out.closed_form);
    out.quadrature = integrate(f, IntegrationDomain::semi_infinite(u, 1.0 / k), scaled_tol).value;
    out.residual = std::fabs(out.closed_form - out.quadrature);
    return out;
}

}  // namespace rankbound
