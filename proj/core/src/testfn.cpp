#include "rankbound/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "rankbound/errors.hpp"

namespace rankbound {
namespace {

// Smoothstep 1/(1 + exp(1/s - 1/(1-s))) and its derivative on s in (0,1).
double smoothstep(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double z = 1.0 / s - 1.0 / (1.0 - s);
    if (z > 700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(z));
}

double smoothstep_derivative(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double v = smoothstep(s);
    if (v == 0.0 || v == 1.0) return 0.0;
    const double u = 1.0 - s;
    return v * (1.0 - v) * (1.0 / (s * s) + 1.0 / (u * u));
}

// Derivatives of sech up to order 4, in terms of s = sech x and t = tanh x.
double sech_derivative(double x, int order) {
    const double s = 1.0 / std::cosh(x);
    const double t = std::tanh(x);
    const double t2 = t * t;
    switch (order) {
        case 0: return s;
        case 1: return -s * t;
        case 2: return s * (2.0 * t2 - 1.0);
        case 3: return s * t * (5.0 - 6.0 * t2);
        case 4: return s * (24.0 * t2 * t2 - 28.0 * t2 + 5.0);
        default: throw DomainError("sech_derivative: order must be 0..4");
    }
}

// n-th derivative of (1 - side*x) sech x, side = +1 on (0,1), -1 on (-1,0).
double phi0_branch(double x, int n, double side) {
    double v = (1.0 - side * x) * sech_derivative(x, n);
    if (n > 0) v -= n * side * sech_derivative(x, n - 1);
    return v;
}

SmoothPiece phi0_piece(int order, double side, double sign) {
    return SmoothPiece{
        [=](double x) { return sign * phi0_branch(x, order, side); },
        [=](double x) { return sign * phi0_branch(x, order + 1, side); },
        [=](double x) { return sign * phi0_branch(x, order + 2, side); },
    };
}

}  // namespace

SmoothingParam::SmoothingParam(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps <= 0.25)) throw DomainError("smoothing parameter eps must lie in (0, 1/4]");
}

double g_eps(SmoothingParam eps, double x) {
    const double e = eps.value();
    const double ax = std::fabs(x);
    if (ax <= 0.5) return 1.0;
    if (ax >= 0.5 + e) return 0.0;
    return smoothstep((0.5 + e - ax) / e);
}

double g_eps_derivative(SmoothingParam eps, double x) {
    const double e = eps.value();
    const double ax = std::fabs(x);
    if (ax <= 0.5 || ax >= 0.5 + e) return 0.0;
    const double d = smoothstep_derivative((0.5 + e - ax) / e) / e;
    return x > 0.0 ? -d : d;
}

SmoothedTestFunction::SmoothedTestFunction(SmoothingParam eps, double tol) : eps_(eps.value()), tol_(tol) {
    norm_ = convolution(0.0, 0);
}

double SmoothedTestFunction::convolution(double x, int order) const {
    const SmoothingParam p(eps_);
    const double r = 0.5 + eps_;
    const double lo = std::max(-r, x - r);
    const double hi = std::min(r, x + r);
    if (!(hi > lo)) return 0.0;
    const double cuts[] = {-0.5, 0.5, x - 0.5, x + 0.5};
    RealFunction f;
    switch (order) {
        case 0: f = [p, x](double t) { return g_eps(p, t) * g_eps(p, x - t); }; break;
        case 1: f = [p, x](double t) { return g_eps(p, t) * g_eps_derivative(p, x - t); }; break;
        case 2: f = [p, x](double t) { return g_eps_derivative(p, t) * g_eps_derivative(p, x - t); }; break;
        default: throw DomainError("convolution order must be 0..2");
    }
    // The order-n convolution is O(eps^{-n}); keep the tolerance relative to that.
    const double scale = order == 0 ? 1.0 : std::pow(eps_, -order);
    return integrate(f, IntegrationDomain::finite(lo, hi), tol_ * scale, cuts).value;
}

Jet SmoothedTestFunction::jet(double x) const {
    if (std::fabs(x) >= support()) return {};
    const double c0 = convolution(x, 0);
    const double c1 = convolution(x, 1);
    const double c2 = convolution(x, 2);
    const double s = 1.0 / std::cosh(x);
    const double t = std::tanh(x);
    // (1/cosh)' = -s t, (1/cosh)'' = s (2t^2 - 1)
    Jet j;
    j.value = c0 * s / norm_;
    j.first = (c1 * s - c0 * s * t) / norm_;
    j.second = (c2 * s - 2.0 * c1 * s * t + c0 * s * (2.0 * t * t - 1.0)) / norm_;
    return j;
}

std::vector<double> SmoothedTestFunction::breakpoints() const {
    const double e = eps_;
    return {-1.0 - 2.0 * e, -1.0, -e, e, 1.0, 1.0 + 2.0 * e};
}

double phi_eps(SmoothingParam eps, double x) { return SmoothedTestFunction(eps)(x); }

PiecewiseSmoothFn phi0_pieces() {
    const BreakpointInfo kink{true, false};
    return PiecewiseSmoothFn({-1.0, 0.0, 1.0}, {phi0_piece(0, -1.0, 1.0), phi0_piece(0, 1.0, 1.0)},
                             {kink, kink, kink});
}

double phi0_inflection() {
    // phi_0'' = sech x * ((1-x)(2 tanh^2 x - 1) + 2 tanh x) on (0,1): -1 at 0, > 0 at 1.
    auto f = [](double x) {
        const double t = std::tanh(x);
        return (1.0 - x) * (2.0 * t * t - 1.0) + 2.0 * t;
    };
    std::uintmax_t iters = 200;
    auto [lo, hi] =
        boost::math::tools::toms748_solve(f, 0.0, 1.0, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (lo + hi);
}

Measure limit_measure(int order) {
    const BreakpointInfo kink{true, false};
    switch (order) {
        case 0:
            return Measure(phi0_pieces());
        case 1:
            // phi_0' > 0 on (-1,0) and < 0 on (0,1).
            return Measure(PiecewiseSmoothFn({-1.0, 0.0, 1.0},
                                             {phi0_piece(1, -1.0, 1.0), phi0_piece(1, 1.0, -1.0)},
                                             {kink, kink, kink}));
        case 2: {
            const double r = phi0_inflection();
            // phi_0'' is even, < 0 on (-r, r) and > 0 on (r, 1).
            PiecewiseSmoothFn density({-1.0, -r, 0.0, r, 1.0},
                                      {phi0_piece(2, -1.0, 1.0), phi0_piece(2, -1.0, -1.0),
                                       phi0_piece(2, 1.0, -1.0), phi0_piece(2, 1.0, 1.0)},
                                      {kink, {}, kink, {}, kink});
            const PiecewiseSmoothFn phi0 = phi0_pieces();
            const double jump0 = std::fabs(phi0.one_sided(0.0, 1, Side::left)) +
                                 std::fabs(phi0.one_sided(0.0, 1, Side::right));
            const double jump_left = std::fabs(phi0.one_sided(-1.0, 1, Side::right));
            const double jump_right = std::fabs(phi0.one_sided(1.0, 1, Side::left));
            return Measure(std::move(density), {{-1.0, jump_left}, {0.0, jump0}, {1.0, jump_right}});
        }
        default:
            throw DomainError("limit_measure: order must be 0, 1 or 2");
    }
}

QuadResult laplace(const Measure& m, double s, double tol) {
    if (!(std::fabs(s) <= 4.0)) throw DomainError("laplace: |s| must not exceed 4");
    return integrate_measure([s](double x) { return std::exp(s * x); }, m, tol);
}

QuadResult laplace_derivative(const Measure& m, double s, double tol) {
    return integrate_measure([s](double x) { return x * std::exp(s * x); }, m, tol);
}

PositivityResult check_positivity(const RealFunction& f, double lo, double hi, const PositivityGrid& grid,
                                  std::span<const double> breakpoints) {
    if (!(grid.sigma_step > 0.0) || !(grid.tau_step > 0.0) || grid.sigma_max < 0.0 || grid.tau_max < 0.0)
        throw DomainError("check_positivity: invalid grid");
    const FixedRule rule = composite_rule(lo, hi, grid.panels, breakpoints);
    std::vector<double> values(rule.nodes.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(rule.nodes[i]);

    PositivityResult best;
    best.min_value = std::numeric_limits<double>::infinity();
    const auto n_sigma = static_cast<long>(std::floor(grid.sigma_max / grid.sigma_step + 1e-9));
    const auto n_tau = static_cast<long>(std::floor(grid.tau_max / grid.tau_step + 1e-9));
    for (long i = -n_sigma; i <= n_sigma; ++i) {
        const double sigma = static_cast<double>(i) * grid.sigma_step;
        for (long k = 0; k <= n_tau; ++k) {
            const double tau = static_cast<double>(k) * grid.tau_step;
            double sum = 0.0;
            for (std::size_t n = 0; n < values.size(); ++n) {
                const double x = rule.nodes[n];
                sum += rule.weights[n] * values[n] * std::exp(sigma * x) * std::cos(tau * x);
            }
            ++best.samples;
            if (sum < best.min_value) {
                best.min_value = sum;
                best.sigma = sigma;
                best.tau = tau;
            }
        }
    }
    return best;
}

PositivityResult check_positivity(SmoothingParam eps, const PositivityGrid& grid) {
    const SmoothedTestFunction phi(eps);
    const auto cuts = phi.breakpoints();
    return check_positivity([&phi](double x) { return phi(x); }, -phi.support(), phi.support(), grid, cuts);
}

QuadResult smoothed_functional(const SmoothedTestFunction& phi, int order, const RealFunction& h, double tol) {
    if (order < 0 || order > 2) throw DomainError("smoothed_functional: order must be 0, 1 or 2");
    auto f = [&](double x) {
        const Jet j = phi.jet(x);
        const double v = order == 0 ? j.value : order == 1 ? j.first : j.second;
        return std::fabs(v) * h(x);
    };
    auto cuts = phi.breakpoints();
    cuts.push_back(0.0);
    return integrate(f, IntegrationDomain::finite(-phi.support(), phi.support()), tol, cuts);
}

}  // namespace rankbound
