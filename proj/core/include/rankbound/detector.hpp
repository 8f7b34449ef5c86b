#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rankbound/kernels.hpp"
#include "rankbound/measure.hpp"

namespace rankbound {

// h(s) = 1 - c0 exp(-beta s). Zeros: s_k = (log c0 + 2 pi i k)/beta.
class SyntheticH {
public:
    SyntheticH(double c0, double beta);

    double c0() const { return c0_; }
    double beta() const { return beta_; }

    std::complex<double> operator()(std::complex<double> s) const;
    // log|h(s)|, computed with log1p when |h - 1| is small.
    double log_abs(std::complex<double> s) const;
    // Real part shared by every zero (meaningless when c0 == 0).
    double zero_real_part() const;
    // Zeros with t_lo <= Im <= t_hi.
    std::vector<std::complex<double>> zeros_between(double t_lo, double t_hi) const;

private:
    double c0_;
    double beta_;
};

// [sigma', +inf) x [t1, t2].
struct DetectorBox {
    double sigma_prime;
    double t1;
    double t2;

    double height() const { return t2 - t1; }
};

struct ZeroCountCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    int zeros_inside = 0;
};

// Zero-counting identity for holomorphic h with h -> 1 faster than
// exp(-pi Re(s)/(t2 - t1)):
//   2(t2-t1) sum_{beta0 > sigma', t1 < gamma0 < t2} sin(pi(gamma0-t1)/L) sinh(pi(beta0-sigma')/L)
//     = int_{t1}^{t2} sin(pi(t-t1)/L) log|h(sigma'+it)| dt
//       + int_{sigma'}^{inf} sinh(pi(b-sigma')/L) (log|h(b+it1)| + log|h(b+it2)|) db.
// The second integral is truncated where |log|h|| drops below 1e-300.
// Throws DomainError if beta <= pi/L or a zero lies within 1e-6 of the box
// boundary.
ZeroCountCheck zero_count_identity(const SyntheticH& h, const DetectorBox& box, double tol = 1e-10);

struct DetectorCase {
    SyntheticH h;
    DetectorBox box;
    int planted = 0;  // zeros strictly inside the box with Re > sigma'
};

// Cases with 0-3 planted zeros, cycling through the counts. Zeros keep at
// least 0.05 from every edge of the box and beta >= 1.25 pi/(t2 - t1).
std::vector<DetectorCase> random_detector_cases(std::uint64_t seed, int count);

// Weight attached by the enlarged-box detector to a zero rho of the
// original box [sigma, inf) x [t1, t1 + 1/lambda], with 2 mu + 1 = pi:
//   lambda / (pi sin(pi mu/(2mu+1))) * 2(t2'-t1') sinh(pi(beta-sigma')/(t2'-t1')) sin(pi(gamma-t1')/(t2'-t1')).
// It is >= 1 for every such zero.
double detector_weight(double lambda, double sigma, double t1, std::complex<double> rho);

// a^2/(1-a)^2 (F(1,u) - F(a,u)).
double density_main_term(double a, double u);

// a^2/(1-a)^2 (G_psi(1) - G_psi(a)).
double zt_bound(double a, const Measure& psi, AtomPolicy policy = AtomPolicy::continuous_transform,
                double tol = 1e-12);

}  // namespace rankbound
