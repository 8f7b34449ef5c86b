#include "rankbound/measure.hpp"

#include <algorithm>
#include <cmath>

#include "rankbound/errors.hpp"

namespace rankbound {

PiecewiseSmoothFn::PiecewiseSmoothFn(std::vector<double> breakpoints, std::vector<SmoothPiece> pieces,
                                     std::vector<BreakpointInfo> info)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), info_(std::move(info)) {
    if (breakpoints_.size() < 2) throw DomainError("PiecewiseSmoothFn needs at least two breakpoints");
    if (pieces_.size() + 1 != breakpoints_.size())
        throw DomainError("PiecewiseSmoothFn needs exactly one piece per interval");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i + 1] > breakpoints_[i]))
            throw DomainError("PiecewiseSmoothFn breakpoints must be strictly increasing");
    }
    if (info_.empty()) info_.assign(breakpoints_.size(), BreakpointInfo{});
    if (info_.size() != breakpoints_.size())
        throw DomainError("PiecewiseSmoothFn needs one continuity record per breakpoint");
}

PiecewiseSmoothFn PiecewiseSmoothFn::zero(double lo, double hi) {
    auto z = [](double) { return 0.0; };
    return PiecewiseSmoothFn({lo, hi}, {SmoothPiece{z, z, z}});
}

double PiecewiseSmoothFn::eval_piece(std::size_t piece, double x, int order) const {
    const SmoothPiece& p = pieces_[piece];
    switch (order) {
        case 0: return p.value(x);
        case 1: return p.first(x);
        case 2: return p.second(x);
        default: throw DomainError("PiecewiseSmoothFn supports derivative orders 0, 1, 2");
    }
}

double PiecewiseSmoothFn::derivative(double x, int order) const {
    if (order < 0 || order > 2) throw DomainError("PiecewiseSmoothFn supports derivative orders 0, 1, 2");
    if (x < breakpoints_.front() || x > breakpoints_.back()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t piece = static_cast<std::size_t>(it - breakpoints_.begin());
    piece = piece == 0 ? 0 : piece - 1;
    piece = std::min(piece, pieces_.size() - 1);
    return eval_piece(piece, x, order);
}

double PiecewiseSmoothFn::one_sided(double x, int order, Side side) const {
    if (order < 0 || order > 2) throw DomainError("PiecewiseSmoothFn supports derivative orders 0, 1, 2");
    if (side == Side::left) {
        if (x <= breakpoints_.front() || x > breakpoints_.back()) return 0.0;
        auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
        return eval_piece(static_cast<std::size_t>(it - breakpoints_.begin()) - 1, x, order);
    }
    if (x < breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return eval_piece(static_cast<std::size_t>(it - breakpoints_.begin()) - 1, x, order);
}

PiecewiseSmoothFn PiecewiseSmoothFn::scaled(double factor) const {
    std::vector<SmoothPiece> pieces;
    pieces.reserve(pieces_.size());
    auto wrap = [factor](RealFunction f) -> RealFunction { return [f, factor](double x) { return factor * f(x); }; };
    for (const SmoothPiece& p : pieces_) pieces.push_back({wrap(p.value), wrap(p.first), wrap(p.second)});
    return PiecewiseSmoothFn(breakpoints_, std::move(pieces), info_);
}

Measure::Measure(PiecewiseSmoothFn density, std::vector<Atom> atoms)
    : density_(std::move(density)), atoms_(std::move(atoms)) {
    for (const Atom& a : atoms_) {
        if (!(a.mass >= 0.0)) throw DomainError("Measure atoms must have nonnegative mass");
        if (a.location < density_.support_lo() || a.location > density_.support_hi())
            throw DomainError("Measure atoms must lie in the closure of the density support");
    }
}

Measure Measure::zero() { return Measure(PiecewiseSmoothFn::zero()); }

Measure Measure::continuous_part() const { return Measure(density_); }

Measure Measure::scaled(double factor) const {
    if (!(factor >= 0.0)) throw DomainError("Measure::scaled requires a nonnegative factor");
    std::vector<Atom> atoms;
    atoms.reserve(atoms_.size());
    for (const Atom& a : atoms_) atoms.push_back({a.location, a.mass * factor});
    return Measure(density_.scaled(factor), std::move(atoms));
}

}  // namespace rankbound
