#include "rankbound/mollifier.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <string>

#include "rankbound/errors.hpp"

namespace rankbound {

ArithTable::ArithTable(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
    if (limit < 1) throw DomainError("ArithTable: limit must be at least 1");
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

void ArithTable::check(std::uint32_t n) const {
    if (n == 0) throw DomainError("ArithTable: n must be positive");
    if (n > limit_)
        throw TableError("ArithTable: " + std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
}

int ArithTable::mobius(std::uint32_t n) const {
    check(n);
    int sign = 1;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<std::uint32_t> ArithTable::distinct_primes(std::uint32_t n) const {
    check(n);
    std::vector<std::uint32_t> out;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    return out;
}

int ArithTable::divisor_count(std::uint32_t n) const {
    check(n);
    int count = 1;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    return count;
}

double ArithTable::omega(std::uint32_t n, double s) const {
    double out = 1.0;
    for (const std::uint32_t p : distinct_primes(n)) out /= -std::expm1(-s * std::log(static_cast<double>(p)));
    return out;
}

double ArithTable::nu(std::uint32_t n, double delta) const {
    if (!squarefree(n)) return 0.0;
    double out = 1.0 / static_cast<double>(n);
    for (const std::uint32_t p : distinct_primes(n)) out *= 1.0 - std::pow(static_cast<double>(p), -(1.0 + 2.0 * delta));
    return out;
}

double ArithTable::eta(std::uint32_t n, double t) const {
    check(n);
    double out = 1.0;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        const double lp = std::log(static_cast<double>(p));
        double local = 0.0;
        for (int j = 0; j <= e; ++j) local += std::cos(t * (2 * j - e) * lp);
        out *= local;
    }
    return out;
}

void MollifierParams::validate() const {
    if (M < 10) throw DomainError("MollifierParams: M must be at least 10");
    if (!(a > 0.0 && a < 1.0)) throw DomainError("MollifierParams: a must lie in (0, 1)");
    if (!(delta >= 1e-3 && delta <= 0.2)) throw DomainError("MollifierParams: delta must lie in [1e-3, 0.2]");
    if (!std::isfinite(t)) throw DomainError("MollifierParams: t must be finite");
}

ZetaValues zeta_vals(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("zeta_vals: delta must lie in (0, 1]");
    constexpr int kHead = 10;
    constexpr int kTerms = 10;
    const double s = 1.0 + 2.0 * delta;
    const double n = kHead;
    const double log_n = std::log(n);

    double z = 0.0;
    double zp = 0.0;
    for (int k = 1; k < kHead; ++k) {
        const double lk = std::log(static_cast<double>(k));
        const double term = std::exp(-s * lk);
        z += term;
        zp -= lk * term;
    }
    const double tail = std::exp((1.0 - s) * log_n);
    z += tail / (s - 1.0);
    zp += -log_n * tail / (s - 1.0) - tail / ((s - 1.0) * (s - 1.0));
    const double half = 0.5 * std::exp(-s * log_n);
    z += half;
    zp -= log_n * half;

    // Rising factorial s(s+1)...(s+2j-2) and its s-derivative.
    double rise = s;
    double rise_d = 1.0;
    double fact = 2.0;
    for (int j = 1; j <= kTerms; ++j) {
        const double b = boost::math::bernoulli_b2n<double>(j);
        const double pw = std::exp((-s - 2.0 * j + 1.0) * log_n);
        z += b / fact * rise * pw;
        zp += b / fact * (rise_d - log_n * rise) * pw;
        // advance to j + 1: multiply by (s + 2j - 1)(s + 2j)
        const double f1 = s + 2.0 * j - 1.0;
        const double f2 = s + 2.0 * j;
        rise_d = rise_d * f1 * f2 + rise * (f1 + f2);
        rise *= f1 * f2;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return {z, zp};
}

double g_cap(double M, double a, double x) {
    if (!(x > 0.0)) throw DomainError("g_cap: x must be positive");
    const double lo = std::pow(M, a);
    if (x <= lo) return 1.0;
    if (x <= M) return std::log(x / M) / ((a - 1.0) * std::log(M));
    return 0.0;
}

std::complex<double> y_k_bruteforce(std::uint32_t k, const MollifierParams& p, const ArithTable& table) {
    p.validate();
    if (k == 0) throw DomainError("y_k_bruteforce: k must be positive");
    if (k > p.M) return {0.0, 0.0};
    if (p.M > table.limit()) throw TableError("y_k_bruteforce: sieve does not cover M");
    const int mu_k = table.mobius(k);
    if (mu_k == 0) return {0.0, 0.0};

    const double s = 1.0 + 2.0 * p.delta;
    const double M = static_cast<double>(p.M);
    std::complex<double> total{0.0, 0.0};
    const std::uint32_t m_max = p.M / k;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
        const int mu_m = table.mobius(m);
        if (mu_m == 0 || table.mobius(k * m) == 0) continue;
        const double eta_m = table.eta(m, p.t);
        const double log_m = std::log(static_cast<double>(m));
        const std::uint32_t n_max = p.M / (k * m);
        std::complex<double> inner{0.0, 0.0};
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            const std::uint32_t kmn = k * m * n;
            if (!table.squarefree(kmn)) continue;
            const double log_n = std::log(static_cast<double>(n));
            const double mag = std::exp(-s * (log_m + log_n)) * g_cap(M, p.a, static_cast<double>(kmn));
            inner += std::polar(mag, -p.t * (log_m + 2.0 * log_n));
        }
        total += static_cast<double>(mu_m) * eta_m * inner;
    }
    const double log_k = std::log(static_cast<double>(k));
    return static_cast<double>(mu_k) * std::polar(std::exp(-p.delta * log_k), -p.t * log_k) * total;
}

std::complex<double> y_k_main_term(std::uint32_t k, const MollifierParams& p, const ArithTable& table) {
    p.validate();
    const int mu_k = table.mobius(k);
    if (mu_k == 0) return {0.0, 0.0};
    const double log_k = std::log(static_cast<double>(k));
    const double scale = mu_k * table.omega(k, 1.0 + 2.0 * p.delta) / zeta_vals(p.delta).zeta;
    return scale * std::polar(std::exp(-p.delta * log_k), -p.t * log_k);
}

SSums s_sums(const MollifierParams& p, const ArithTable& table) {
    p.validate();
    if (p.M > table.limit()) throw TableError("s_sums: sieve does not cover M");
    const double s = 1.0 + 2.0 * p.delta;
    const auto [z, zp] = zeta_vals(p.delta);
    const double r = zp / z;
    const double log_M = std::log(static_cast<double>(p.M));
    const double L = (1.0 - p.a) * log_M;
    const double L2 = L * L;
    const auto k_cut = static_cast<std::uint32_t>(std::floor(std::pow(static_cast<double>(p.M), p.a) + 1e-9));

    // Accumulated in long double; each piece is a sum of same-sign terms.
    long double low = 0.0L;
    long double full = 0.0L;
    long double sq = 0.0L;
    long double lin = 0.0L;
    long double flat = 0.0L;
    for (std::uint32_t k = 1; k <= p.M; ++k) {
        if (!table.squarefree(k)) continue;
        const double log_k = std::log(static_cast<double>(k));
        const double w = table.omega(k, s) * std::exp(-s * log_k);
        if (k <= k_cut) {
            low += w;
            continue;
        }
        const double lg = log_M - log_k;
        full += w * (lg - r) * (lg - r);
        sq += w * lg * lg;
        lin += w * lg;
        flat += w;
    }

    SSums out;
    out.S = static_cast<double>((low + full / L2) / z);
    out.S1 = static_cast<double>((low + sq / L2) / z);
    out.S2 = static_cast<double>(-2.0L * zp / (z * z) / L2 * lin);
    out.S3 = static_cast<double>(zp * zp / (z * z * z) / L2 * flat);

    const double d = p.delta;
    const double A = std::exp(-2.0 * p.a * d * log_M);
    const double B = std::exp(-2.0 * d * log_M);
    out.closed1 = 1.0 + 1.0 / (d * L) * ((A - B) / (2.0 * d * L) - A);
    out.closed2 = -2.0 * zp / (z * z) / L * ((B - A) / (4.0 * d * d * L) + A / (2.0 * d));
    out.closed3 = zp * zp / (z * z * z) * (A - B) / (2.0 * d * L2);
    out.closedS = 1.0 + (A - B) / (4.0 * d * d * (1.0 - p.a) * (1.0 - p.a) * log_M * log_M);
    return out;
}

TruncatedZetaCheck truncated_zeta_check(double m_prime, double delta, const ArithTable& table) {
    if (!(m_prime > 1.0)) throw DomainError("truncated_zeta_check: M' must exceed 1");
    if (m_prime == std::floor(m_prime)) throw DomainError("truncated_zeta_check: M' must not be an integer");
    if (!(delta >= 1e-3 && delta <= 0.2)) throw DomainError("truncated_zeta_check: delta must lie in [1e-3, 0.2]");
    const double top = std::floor(m_prime);
    if (top > static_cast<double>(table.limit())) throw TableError("truncated_zeta_check: sieve does not cover M'");

    const double s = 1.0 + 2.0 * delta;
    long double sum = 0.0L;
    const auto k_max = static_cast<std::uint32_t>(top);
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        if (!table.squarefree(k)) continue;
        sum += table.omega(k, s) * std::exp(-s * std::log(static_cast<double>(k)));
    }
    TruncatedZetaCheck out;
    out.partial_sum = static_cast<double>(sum);
    out.closed_form = zeta_vals(delta).zeta - std::pow(m_prime, -2.0 * delta) / (2.0 * delta);
    out.residual = std::fabs(out.partial_sum - out.closed_form);
    out.error_scale = 2.0 * std::pow(m_prime, -delta - 0.25);
    return out;
}

}  // namespace rankbound
