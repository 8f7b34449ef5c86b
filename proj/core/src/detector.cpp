#include "rankbound/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rankbound/errors.hpp"
#include "rankbound/quadrature.hpp"

namespace rankbound {
namespace {

constexpr double kBoundaryGuard = 1e-6;

}  // namespace

SyntheticH::SyntheticH(double c0, double beta) : c0_(c0), beta_(beta) {
    if (!(c0 >= 0.0)) throw DomainError("SyntheticH: c0 must be nonnegative");
    if (!(beta > 0.0)) throw DomainError("SyntheticH: beta must be positive");
}

std::complex<double> SyntheticH::operator()(std::complex<double> s) const {
    return 1.0 - c0_ * std::exp(-beta_ * s);
}

double SyntheticH::log_abs(std::complex<double> s) const {
    if (c0_ == 0.0) return 0.0;
    const std::complex<double> w = c0_ * std::exp(-beta_ * s);
    const double aw = std::abs(w);
    if (aw < 0.5) {
        // |1 - w|^2 = 1 - 2 Re w + |w|^2
        return 0.5 * std::log1p(-2.0 * w.real() + aw * aw);
    }
    return std::log(std::abs(1.0 - w));
}

double SyntheticH::zero_real_part() const { return std::log(c0_) / beta_; }

std::vector<std::complex<double>> SyntheticH::zeros_between(double t_lo, double t_hi) const {
    std::vector<std::complex<double>> out;
    if (c0_ == 0.0) return out;
    const double spacing = 2.0 * std::numbers::pi / beta_;
    const auto k_lo = static_cast<long>(std::ceil(t_lo / spacing));
    const auto k_hi = static_cast<long>(std::floor(t_hi / spacing));
    for (long k = k_lo; k <= k_hi; ++k) out.emplace_back(zero_real_part(), spacing * static_cast<double>(k));
    return out;
}

ZeroCountCheck zero_count_identity(const SyntheticH& h, const DetectorBox& box, double tol) {
    const double len = box.height();
    if (!(len > 0.0)) throw DomainError("zero_count_identity: t2 must exceed t1");
    if (h.c0() > 0.0 && !(h.beta() > std::numbers::pi / len))
        throw DomainError("zero_count_identity: decay rate beta must exceed pi/(t2 - t1)");

    const double pi_over_len = std::numbers::pi / len;
    ZeroCountCheck out;
    std::vector<double> t_cuts;
    double beta0 = 0.0;
    if (h.c0() > 0.0) {
        beta0 = h.zero_real_part();
        for (const auto& z : h.zeros_between(box.t1 - 1.0, box.t2 + 1.0)) {
            const double gamma = z.imag();
            const bool near_left = std::fabs(beta0 - box.sigma_prime) < kBoundaryGuard &&
                                   gamma > box.t1 - kBoundaryGuard && gamma < box.t2 + kBoundaryGuard;
            const bool near_edges = beta0 > box.sigma_prime - kBoundaryGuard &&
                                    (std::fabs(gamma - box.t1) < kBoundaryGuard ||
                                     std::fabs(gamma - box.t2) < kBoundaryGuard);
            if (near_left || near_edges)
                throw DomainError("zero_count_identity: a zero of h lies on the box boundary");
            if (gamma > box.t1 && gamma < box.t2) {
                t_cuts.push_back(gamma);
                if (beta0 > box.sigma_prime) {
                    out.lhs += 2.0 * len * std::sin(pi_over_len * (gamma - box.t1)) *
                               std::sinh(pi_over_len * (beta0 - box.sigma_prime));
                    ++out.zeros_inside;
                }
            }
        }
    }

    auto vertical = [&](double t) {
        return std::sin(pi_over_len * (t - box.t1)) * h.log_abs({box.sigma_prime, t});
    };
    const QuadResult left = integrate(vertical, IntegrationDomain::finite(box.t1, box.t2), tol, t_cuts);

    double bottom_top = 0.0;
    if (h.c0() > 0.0) {
        auto horizontal = [&](double b) {
            return std::sinh(pi_over_len * (b - box.sigma_prime)) *
                   (h.log_abs({b, box.t1}) + h.log_abs({b, box.t2}));
        };
        // |log|h|| < 1e-300 beyond here.
        const double upper = std::max(box.sigma_prime, beta0) + 300.0 * std::numbers::ln10 / h.beta();
        std::vector<double> b_cuts;
        if (beta0 > box.sigma_prime && beta0 < upper) b_cuts.push_back(beta0);
        bottom_top = integrate(horizontal, IntegrationDomain::finite(box.sigma_prime, upper), tol, b_cuts).value;
    }
    out.rhs = left.value + bottom_top;
    out.residual = std::fabs(out.lhs - out.rhs);
    return out;
}

std::vector<DetectorCase> random_detector_cases(std::uint64_t seed, int count) {
    if (count < 0) throw DomainError("random_detector_cases: count must be nonnegative");
    constexpr double kMargin = 0.05;
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

    std::vector<DetectorCase> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int target = i % 4;
        for (;;) {
            const double len = uniform(0.5, 3.0);
            const double t1 = uniform(-2.0, 2.0);
            const double sigma_p = uniform(-1.0, 1.0);
            const DetectorBox box{sigma_p, t1, t1 + len};
            const double beta = uniform(1.25, 9.0) * std::numbers::pi / len;
            // Zeros to the left of the line when none are wanted, half the time.
            const bool left = target == 0 && uniform(0.0, 1.0) < 0.5;
            const double re = left ? sigma_p - uniform(kMargin, 1.0) : sigma_p + uniform(kMargin, 1.0);
            const SyntheticH h(std::exp(beta * re), beta);

            int inside = 0;
            bool clear = true;
            for (const auto& z : h.zeros_between(box.t1 - 1.0, box.t2 + 1.0)) {
                if (std::fabs(z.imag() - box.t1) < kMargin || std::fabs(z.imag() - box.t2) < kMargin) clear = false;
                if (z.imag() > box.t1 && z.imag() < box.t2 && z.real() > box.sigma_prime) ++inside;
            }
            if (clear && inside == target) {
                out.push_back({h, box, inside});
                break;
            }
        }
    }
    return out;
}

double detector_weight(double lambda, double sigma, double t1, std::complex<double> rho) {
    if (!(lambda > 0.0)) throw DomainError("detector_weight: lambda must be positive");
    const double mu = (std::numbers::pi - 1.0) / 2.0;
    const double sigma_p = sigma - 1.0 / (2.0 * lambda);
    const double t1_p = t1 - mu / lambda;
    const double t2_p = t1 + 1.0 / lambda + mu / lambda;
    const double w = t2_p - t1_p;
    return lambda / (std::numbers::pi * std::sin(std::numbers::pi * mu / (2.0 * mu + 1.0))) * 2.0 * w *
           std::sinh(std::numbers::pi * (rho.real() - sigma_p) / w) *
           std::sin(std::numbers::pi * (rho.imag() - t1_p) / w);
}

double density_main_term(double a, double u) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("density_main_term: a must lie in (0, 1)");
    if (!(u > 0.0)) throw DomainError("density_main_term: u must be positive");
    return a * a / ((1.0 - a) * (1.0 - a)) * (big_f(1.0, u) - big_f(a, u));
}

double zt_bound(double a, const Measure& psi, AtomPolicy policy, double tol) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("zt_bound: a must lie in (0, 1)");
    return a * a / ((1.0 - a) * (1.0 - a)) *
           (g_psi(1.0, psi, policy, tol).value - g_psi(a, psi, policy, tol).value);
}

}  // namespace rankbound
