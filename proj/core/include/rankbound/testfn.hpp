#pragma once

#include <vector>

#include "rankbound/measure.hpp"
#include "rankbound/quadrature.hpp"

namespace rankbound {

// Ramp width of the plateau function g_eps, in (0, 1/4].
class SmoothingParam {
public:
    explicit SmoothingParam(double eps);
    double value() const { return eps_; }

private:
    double eps_;
};

// Even C-infinity plateau: 1 on [-1/2, 1/2], 0 for |x| >= 1/2 + eps, and the
// bump-integral smoothstep 1/(1 + exp(1/s - 1/(1-s))) on the ramps.
double g_eps(SmoothingParam eps, double x);
double g_eps_derivative(SmoothingParam eps, double x);

struct Jet {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

// phi_eps = (g_eps * g_eps) / cosh, divided by (g_eps * g_eps)(0) so that
// phi_eps(0) = 1. The convolution and its first two derivatives are
// evaluated by quadrature at every call:
//   (g*g)'  = g * g',   (g*g)'' = g' * g'.
class SmoothedTestFunction {
public:
    explicit SmoothedTestFunction(SmoothingParam eps, double tol = 1e-13);

    double eps() const { return eps_; }
    double operator()(double x) const { return jet(x).value; }
    Jet jet(double x) const;
    double normalization() const { return norm_; }

    // Outer support bound 1 + 2 eps.
    double support() const { return 1.0 + 2.0 * eps_; }
    // Points where phi_eps changes character: ends of the three
    // transition layers around -1, 0 and 1.
    std::vector<double> breakpoints() const;

private:
    double convolution(double x, int order) const;

    double eps_;
    double tol_;
    double norm_ = 1.0;
};

double phi_eps(SmoothingParam eps, double x);

// phi_0(x) = max(0, 1 - |x|) / cosh x with breakpoints {-1, 0, 1} and
// closed-form derivatives on each piece.
PiecewiseSmoothFn phi0_pieces();

// Unique zero of phi_0'' on (0, 1).
double phi0_inflection();

// eps -> 0 limits of |phi_eps^{(order)}| dx: density |phi_0^{(order)}|, and
// for order 2 the jump magnitudes of phi_0' as atoms at -1, 0, 1.
Measure limit_measure(int order);

// int e^{s x} dm(x). Requires |s| <= 4.
QuadResult laplace(const Measure& m, double s, double tol = kDefaultTol);
// d/ds of the above: int x e^{s x} dm(x), atoms included.
QuadResult laplace_derivative(const Measure& m, double s, double tol = kDefaultTol);

// Sampling grid for Re phi^(sigma + i tau) over |sigma| <= sigma_max,
// 0 <= tau <= tau_max.
struct PositivityGrid {
    double sigma_max = 1.0;
    double sigma_step = 0.1;
    double tau_max = 20.0;
    double tau_step = 0.1;
    std::size_t panels = 48;
};

struct PositivityResult {
    double min_value = 0.0;
    double sigma = 0.0;
    double tau = 0.0;
    std::size_t samples = 0;
};

// min over the grid of int f(x) e^{sigma x} cos(tau x) dx, with f tabulated
// once on a composite Kronrod rule over [lo, hi].
PositivityResult check_positivity(const RealFunction& f, double lo, double hi, const PositivityGrid& grid,
                                  std::span<const double> breakpoints = {});
PositivityResult check_positivity(SmoothingParam eps, const PositivityGrid& grid = {});

// int |phi_eps^{(order)}(x)| h(x) dx for finite eps.
QuadResult smoothed_functional(const SmoothedTestFunction& phi, int order, const RealFunction& h,
                               double tol = 1e-9);

}  // namespace rankbound
