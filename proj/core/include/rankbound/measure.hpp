#pragma once

#include <functional>
#include <span>
#include <vector>

namespace rankbound {

using RealFunction = std::function<double(double)>;

// Evaluators for one smooth piece of a piecewise function: value and the
// first two derivatives, valid on the open interval between two breakpoints.
struct SmoothPiece {
    RealFunction value;
    RealFunction first;
    RealFunction second;
};

// Continuity of a piecewise function at one of its breakpoints.
struct BreakpointInfo {
    bool value_continuous = true;
    bool derivative_continuous = true;
};

enum class Side { left, right };

// A real function described by strictly increasing breakpoints b_0 < ... < b_n
// and one smooth piece per interval (b_i, b_{i+1}). The function is zero
// outside [b_0, b_n]. At an interior breakpoint the right-hand piece is used
// by operator() and derivative(); use one_sided() for explicit limits.
class PiecewiseSmoothFn {
public:
    PiecewiseSmoothFn(std::vector<double> breakpoints, std::vector<SmoothPiece> pieces,
                      std::vector<BreakpointInfo> info = {});

    // Identically zero on [lo, hi].
    static PiecewiseSmoothFn zero(double lo = -1.0, double hi = 1.0);

    PiecewiseSmoothFn scaled(double factor) const;

    double operator()(double x) const { return derivative(x, 0); }
    double derivative(double x, int order) const;
    double one_sided(double x, int order, Side side) const;

    std::span<const double> breakpoints() const { return breakpoints_; }
    const BreakpointInfo& info(std::size_t i) const { return info_.at(i); }
    double support_lo() const { return breakpoints_.front(); }
    double support_hi() const { return breakpoints_.back(); }

private:
    double eval_piece(std::size_t piece, double x, int order) const;

    std::vector<double> breakpoints_;
    std::vector<SmoothPiece> pieces_;
    std::vector<BreakpointInfo> info_;
};

struct Atom {
    double location;
    double mass;
};

// Nonnegative measure: absolutely continuous part with a piecewise smooth
// density plus finitely many point masses inside the density's support.
class Measure {
public:
    explicit Measure(PiecewiseSmoothFn density, std::vector<Atom> atoms = {});

    static Measure zero();

    const PiecewiseSmoothFn& density() const { return density_; }
    std::span<const Atom> atoms() const { return atoms_; }

    // Same density, no atoms.
    Measure continuous_part() const;
    Measure scaled(double factor) const;

private:
    PiecewiseSmoothFn density_;
    std::vector<Atom> atoms_;
};

}  // namespace rankbound
