#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace rankbound {

// Smallest-prime-factor sieve over [1, limit].
class ArithTable {
public:
    explicit ArithTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }

    int mobius(std::uint32_t n) const;
    bool squarefree(std::uint32_t n) const { return mobius(n) != 0; }
    std::vector<std::uint32_t> distinct_primes(std::uint32_t n) const;
    int divisor_count(std::uint32_t n) const;

    // prod_{p | n} (1 - p^{-s})^{-1}
    double omega(std::uint32_t n, double s) const;
    // (1/n) prod_{p | n} (1 - p^{-(1+2 delta)}) on squarefree n, 0 otherwise.
    double nu(std::uint32_t n, double delta) const;
    // sum_{uv = n} (u/v)^{it}; real because the divisor pairs are symmetric.
    double eta(std::uint32_t n, double t) const;

private:
    void check(std::uint32_t n) const;

    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

struct MollifierParams {
    std::uint32_t M = 100000;
    double a = 0.5;
    double delta = 0.05;
    double t = 0.0;

    // M >= 10, 0 < a < 1, 1e-3 <= delta <= 0.2. Throws DomainError.
    void validate() const;
};

struct ZetaValues {
    double zeta = 0.0;
    double zeta_prime = 0.0;
};

// zeta and zeta' at 1 + 2 delta by Euler-Maclaurin summation. 0 < delta <= 1.
ZetaValues zeta_vals(double delta);

// 1 for x <= M^a, log(x/M)/log(M^{a-1}) on [M^a, M], 0 beyond M.
double g_cap(double M, double a, double x);

// mu(k) k^{-delta-it} sum_{m,n} mu(kmn)^2 mu(m) eta_t(m) n^{-it} (mn)^{-(1+2delta+it)} g(kmn).
std::complex<double> y_k_bruteforce(std::uint32_t k, const MollifierParams& p, const ArithTable& table);

// mu(k) omega_{1+2delta}(k) zeta(1+2delta)^{-1} k^{-delta-it}.
std::complex<double> y_k_main_term(std::uint32_t k, const MollifierParams& p, const ArithTable& table);

struct SSums {
    double S = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
    double S3 = 0.0;
    double closed1 = 0.0;
    double closed2 = 0.0;
    double closed3 = 0.0;
    double closedS = 0.0;
};

// Direct summation over squarefree k <= M of the main sum S and its three
// pieces from expanding (log(M/k) - zeta'/zeta)^2, with their closed forms.
SSums s_sums(const MollifierParams& p, const ArithTable& table);

struct TruncatedZetaCheck {
    double partial_sum = 0.0;
    double closed_form = 0.0;
    double residual = 0.0;
    // min over eta of eta M'^{-2 delta} + M'^{-1/2}/eta = 2 M'^{-delta-1/4}
    double error_scale = 0.0;
};

// sum_{k < M'} mu(k)^2 omega_{1+2delta}(k) k^{-1-2delta}  versus
// zeta(1+2delta) - M'^{-2delta}/(2delta). M' > 1 and not an integer.
TruncatedZetaCheck truncated_zeta_check(double m_prime, double delta, const ArithTable& table);

}  // namespace rankbound
