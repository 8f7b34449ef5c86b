#include "rankbound/bound.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "rankbound/errors.hpp"
#include "rankbound/testfn.hpp"

namespace rankbound {
namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= 0.5)) throw DomainError("Delta must lie in (0, 1/2]");
}

std::size_t argmin(const std::vector<BoundReport>& reports) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto& r = reports[i];
        const auto& b = reports[best];
        if (r.H < b.H || (r.H == b.H && r.a < b.a)) best = i;
    }
    return best;
}

}  // namespace

double tail_weight() { return std::numbers::pi * std::numbers::pi / 6.0 - 1.25; }

BoundConstants bound_constants(AtomPolicy policy, double tol) {
    BoundConstants out;
    out.phi0_hat0 = laplace(limit_measure(0), 0.0, tol).value;
    out.g_phi_1 = g_psi(1.0, limit_measure(0), policy, tol).value;
    out.g_dphi_1 = g_psi(1.0, limit_measure(1), policy, tol).value;
    out.g_phi2_1 = g_psi(1.0, limit_measure(2), policy, tol).value;
    return out;
}

double BoundReport::recompute() const {
    const double weight = 4.0 * a * a / ((1.0 - a) * (1.0 - a));
    return 0.5 + (1.0 / (a * delta) + weight * bracket) / phi0_hat0;
}

bool BoundReport::consistent(double tol) const {
    const double br = 3.0 * (g_phi_1 - g_phi_a) + tail_weight() * (g_phi2_1 - g_phi2_a);
    return std::fabs(br - bracket) <= tol * std::max(1.0, std::fabs(bracket)) &&
           std::fabs(recompute() - H) <= tol * std::max(1.0, std::fabs(H));
}

BoundReport h_of_a(double a, double delta, const BoundConstants& consts, AtomPolicy policy, double tol) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("h_of_a: a must lie in (0, 1)");
    check_delta(delta);
    BoundReport r;
    r.a = a;
    r.delta = delta;
    r.phi0_hat0 = consts.phi0_hat0;
    r.g_phi_1 = consts.g_phi_1;
    r.g_phi2_1 = consts.g_phi2_1;
    r.g_phi_a = g_psi(a, limit_measure(0), policy, tol).value;
    r.g_phi2_a = g_psi(a, limit_measure(2), policy, tol).value;
    r.bracket = 3.0 * (r.g_phi_1 - r.g_phi_a) + tail_weight() * (r.g_phi2_1 - r.g_phi2_a);
    r.H = r.recompute();
    return r;
}

BoundReport h_of_a(double a, double delta, AtomPolicy policy, double tol) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("h_of_a: a must lie in (0, 1)");
    check_delta(delta);
    return h_of_a(a, delta, bound_constants(policy, tol), policy, tol);
}

std::vector<double> scan_grid(double a_lo, double a_hi, double step) {
    if (!(step > 0.0)) throw DomainError("scan grid: step must be positive");
    if (!(a_lo > 0.0 && a_hi < 1.0 && a_lo < a_hi)) throw DomainError("scan grid: need 0 < a_lo < a_hi < 1");
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((a_hi - a_lo) / step - 1e-9)));
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = a_lo + static_cast<double>(i) * step;
    return grid;
}

std::vector<BoundReport> scan(double delta, const std::vector<double>& grid, const ScanOptions& opts) {
    check_delta(delta);
    if (grid.empty()) throw DomainError("scan: empty grid");
    const BoundConstants consts = bound_constants(opts.policy, opts.tol);
    std::vector<BoundReport> out(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                out[i] = h_of_a(grid[i], delta, consts, opts.policy, opts.tol);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n_threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, grid.size()));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

MinimizeResult minimize(double delta, double a_lo, double a_hi, double coarse_step, const ScanOptions& opts) {
    MinimizeResult res;
    const std::vector<double> coarse_grid = scan_grid(a_lo, a_hi, coarse_step);
    res.coarse = scan(delta, coarse_grid, opts);
    BoundReport best = res.coarse[argmin(res.coarse)];
    if (coarse_grid.size() >= 2) {
        const double fine = coarse_step / 10.0;
        const double lo = std::max(a_lo, best.a - coarse_step);
        const double hi = std::min(a_hi, best.a + coarse_step);
        const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / fine - 1e-9));
        std::vector<double> fine_grid;
        for (std::size_t i = 0; i < n; ++i) fine_grid.push_back(lo + static_cast<double>(i) * fine);
        if (!fine_grid.empty()) {
            res.refined = scan(delta, fine_grid, opts);
            const BoundReport& cand = res.refined[argmin(res.refined)];
            if (cand.H < best.H || (cand.H == best.H && cand.a < best.a)) best = cand;
        }
    }
    res.a_star = best.a;
    res.report = best;
    return res;
}

}  // namespace rankbound
