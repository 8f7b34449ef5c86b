#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "rankbound/detector.hpp"
#include "rankbound/errors.hpp"
#include "rankbound/kernels.hpp"
#include "rankbound/mollifier.hpp"
#include "rankbound/special.hpp"
#include "rankbound/testfn.hpp"

namespace rankbound::cli {
namespace {

constexpr double kIdentityLimit = 1e-6;

Check at_most(std::string name, double value, double limit) {
    return {std::move(name), value, limit, value <= limit};
}

}  // namespace

std::vector<Check> identities_suite(const SuiteOptions& opts) {
    std::vector<Check> out;
    const double tol = opts.tol;

    double worst = 0.0;
    for (double a : {0.3, 0.48, 0.7, 1.0})
        for (double x : {-1.0, -0.5, 0.0, 0.5, 0.99, 1.0})
            worst = std::max(worst, check_identity_half_line(a, x, tol).residual);
    out.push_back(at_most("half-line E identity", worst, kIdentityLimit));

    worst = 0.0;
    for (double a : {-1.0, 0.5, 1.0})
        for (double gap : {0.5, 1.0, 3.0}) worst = std::max(worst, check_identity_growth(a, std::max(a, 0.0) + gap, tol).residual);
    out.push_back(at_most("growth E identity", worst, kIdentityLimit));

    worst = 0.0;
    for (double x : {1e-3, 0.1, 1.0, 5.0, 20.0}) worst = std::max(worst, check_integration_by_parts(x, tol).residual);
    out.push_back(at_most("E integration by parts", worst, kIdentityLimit));

    for (int order = 0; order <= 2; ++order) {
        worst = 0.0;
        for (double a : {0.3, 0.48, 0.7}) worst = std::max(worst, transform_kernel_equivalence(a, limit_measure(order), tol).residual);
        out.push_back(at_most(fmt::format("transform/kernel equivalence, order {}", order), worst, kIdentityLimit));
    }

    for (Sign sign : {Sign::plus, Sign::minus}) {
        worst = 0.0;
        for (double a : {0.3, 0.48, 0.9})
            for (double u : {0.1, 0.5, 2.0, 10.0}) worst = std::max(worst, i_pm(a, u, sign, tol).residual);
        out.push_back(at_most(fmt::format("shifted E closed form ({})", sign == Sign::plus ? '+' : '-'), worst,
                              kIdentityLimit));
    }
    return out;
}

std::vector<Check> detector_suite(const SuiteOptions& opts) {
    std::vector<Check> out;
    const auto cases = random_detector_cases(opts.seed, opts.detector_cases);
    double worst = 0.0;
    int wrong_count = 0;
    for (const auto& c : cases) {
        const ZeroCountCheck r = zero_count_identity(c.h, c.box, opts.tol);
        worst = std::max(worst, r.residual);
        if (r.zeros_inside != c.planted) ++wrong_count;
    }
    out.push_back(at_most(fmt::format("zero-count identity, {} random cases", cases.size()), worst, kIdentityLimit));
    out.push_back(at_most("planted zeros counted", wrong_count, 0.0));
    out.push_back({"at least 50 cases", static_cast<double>(cases.size()), 50.0, cases.size() >= 50});

    const ZeroCountCheck trivial = zero_count_identity(SyntheticH(0.0, 1.0), {0.0, 0.0, 1.0}, opts.tol);
    out.push_back(at_most("zero-count identity, h = 1", trivial.residual, 0.0));

    bool rejected = false;
    try {
        // Zeros at 0.5 + 2 pi i k / 3; the box edge t1 = 2 pi / 3 passes through one.
        const double beta = 3.0;
        zero_count_identity(SyntheticH(std::exp(beta * 0.5), beta), {0.2, 2.0 * std::numbers::pi / beta, 2.0 * std::numbers::pi / beta + 1.5},
                     opts.tol);
    } catch (const DomainError&) {
        rejected = true;
    }
    out.push_back({"zero on box boundary rejected", rejected ? 1.0 : 0.0, 1.0, rejected});

    double min_weight = std::numeric_limits<double>::infinity();
    for (double lambda : {0.5, 1.0, 4.0})
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j) {
                const double beta = 0.3 + 2.0 * i / (20.0 * lambda);
                const double gamma = j / (20.0 * lambda);
                min_weight = std::min(min_weight, detector_weight(lambda, 0.3, 0.0, {beta, gamma}));
            }
    out.push_back({"detector weight >= 1 on the box", min_weight, 1.0, min_weight >= 1.0});
    return out;
}

std::vector<Check> mollifier_suite(const SuiteOptions& opts) {
    std::vector<Check> out;
    const ArithTable table(opts.sieve_limit);
    for (double delta : opts.deltas) {
        MollifierParams p;
        p.M = opts.M;
        p.a = 0.5;
        p.delta = delta;
        const SSums s = s_sums(p, table);
        out.push_back(at_most(fmt::format("S = S1 + S2 + S3, delta {}", delta), std::fabs(s.S - s.S1 - s.S2 - s.S3),
                              1e-12));
        const double scale = delta * std::pow(static_cast<double>(p.M), -2.0 * p.a * delta);
        out.push_back(at_most(fmt::format("S vs main term, delta {}", delta), std::fabs(s.S - s.closedS), 10.0 * scale));

        const TruncatedZetaCheck z = truncated_zeta_check(static_cast<double>(p.M) + 0.5, delta, table);
        out.push_back(at_most(fmt::format("truncated zeta sum, delta {}", delta), z.residual, 10.0 * z.error_scale));

        for (double t : {0.0, 0.5}) {
            p.t = t;
            double worst = 0.0;
            for (std::uint32_t k : {4u, 12u, 18u, 50u, 98u, p.M + 1, 2 * p.M})
                worst = std::max(worst, std::abs(y_k_bruteforce(k, p, table)));
            out.push_back(at_most(fmt::format("y_k support, delta {}, t {}", delta, t), worst, 0.0));
        }
    }
    return out;
}

}  // namespace rankbound::cli
