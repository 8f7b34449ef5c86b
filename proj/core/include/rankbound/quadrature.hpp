#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rankbound/measure.hpp"

namespace rankbound {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIntervals = 1'000'000;

// value with a heuristic absolute-error indicator (|Kronrod - Gauss| scaled
// as in QUADPACK); not a rigorous bound.
struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t intervals = 0;
};

class IntegrationDomain {
public:
    enum class Kind { finite, semi_infinite };

    static IntegrationDomain finite(double lo, double hi);
    // [lo, +inf) mapped to u in (0,1) through x = lo - scale*log(1-u).
    // scale is the decay length of the integrand.
    static IntegrationDomain semi_infinite(double lo, double scale = 1.0);

    Kind kind() const { return kind_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double scale() const { return scale_; }

    // Largest abscissa the semi-infinite map can reach in double precision
    // (lo + scale*53*log 2). Contributions beyond it are dropped.
    double effective_upper() const;

private:
    IntegrationDomain(Kind kind, double lo, double hi, double scale)
        : kind_(kind), lo_(lo), hi_(hi), scale_(scale) {}

    Kind kind_;
    double lo_;
    double hi_;
    double scale_;
};

// Globally adaptive 21-point Gauss-Kronrod integration. Intervals are never
// split across a breakpoint. Throws QuadratureError when the interval budget
// is exhausted and EvaluationError when f returns a non-finite value.
QuadResult integrate(const RealFunction& f, const IntegrationDomain& domain,
                     double tol = kDefaultTol, std::span<const double> breakpoints = {},
                     std::size_t max_intervals = kDefaultMaxIntervals);

// Integral of h against m: density part by integrate() with the density's
// breakpoints, plus the sum of mass * h(location) over atoms.
QuadResult integrate_measure(const RealFunction& h, const Measure& m, double tol = kDefaultTol);

// Fixed composite 21-point Kronrod rule on [lo, hi] with `panels` equal
// panels between consecutive breakpoints. Used where one tabulation of an
// expensive function is reused for many weighted integrals.
struct FixedRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <typename F>
    double apply(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

FixedRule composite_rule(double lo, double hi, std::size_t panels,
                         std::span<const double> breakpoints = {});

}  // namespace rankbound
