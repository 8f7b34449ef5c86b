#pragma once

#include <vector>

#include "rankbound/kernels.hpp"

namespace rankbound {

// pi^2/6 - 5/4, the tail sum_{n >= 3} n^{-2}.
double tail_weight();

// a-independent ingredients of H.
struct BoundConstants {
    double phi0_hat0 = 0.0;
    double g_phi_1 = 0.0;
    double g_dphi_1 = 0.0;
    double g_phi2_1 = 0.0;
};

BoundConstants bound_constants(AtomPolicy policy = AtomPolicy::continuous_transform, double tol = 1e-12);

struct BoundReport {
    double a = 0.0;
    double delta = 0.0;
    double phi0_hat0 = 0.0;
    double g_phi_1 = 0.0;
    double g_phi_a = 0.0;
    double g_phi2_1 = 0.0;
    double g_phi2_a = 0.0;
    double bracket = 0.0;
    double H = 0.0;

    // H recomputed from the other fields.
    double recompute() const;
    bool consistent(double tol = 1e-12) const;
};

// H(a, Delta) = 1/2 + (1/phi0_hat0) (1/(a Delta) + 4a^2/(1-a)^2 bracket).
BoundReport h_of_a(double a, double delta, const BoundConstants& consts,
                   AtomPolicy policy = AtomPolicy::continuous_transform, double tol = 1e-12);
BoundReport h_of_a(double a, double delta, AtomPolicy policy = AtomPolicy::continuous_transform,
                   double tol = 1e-12);

struct ScanOptions {
    AtomPolicy policy = AtomPolicy::continuous_transform;
    double tol = 1e-12;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Half-open grid a_lo + i*step < a_hi.
std::vector<double> scan_grid(double a_lo, double a_hi, double step);

// Reports in grid order; evaluation may run on several threads.
std::vector<BoundReport> scan(double delta, const std::vector<double>& grid, const ScanOptions& opts = {});

struct MinimizeResult {
    double a_star = 0.0;
    BoundReport report;
    std::vector<BoundReport> coarse;
    std::vector<BoundReport> refined;
};

// Coarse scan, then one pass at step/10 over [a_c - step, a_c + step]
// clipped to [a_lo, a_hi). Ties go to the smallest a.
MinimizeResult minimize(double delta, double a_lo, double a_hi, double coarse_step, const ScanOptions& opts = {});

}  // namespace rankbound
