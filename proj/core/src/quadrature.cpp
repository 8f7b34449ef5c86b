#include "rankbound/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "rankbound/errors.hpp"

namespace rankbound {
namespace {

// QUADPACK qk21 abscissae and weights. xgk[1], xgk[3], ..., xgk[9] are the
// 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208814374720, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kNegligible = 1e-300;

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool at_roundoff = false;  // error estimate is the 50 eps * resabs floor
};

struct ByError {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

template <typename F>
Segment kronrod21(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::fabs(half);

    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    const double fc = f(center);
    double resg = 0.0;
    double resk = kWgk[10] * fc;
    double resabs = std::fabs(resk);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::fabs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double value = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    bool at_roundoff = false;
    if (resabs > kTiny / (50.0 * kEps) && err <= 50.0 * kEps * resabs) {
        err = 50.0 * kEps * resabs;
        at_roundoff = true;
    }
    return {a, b, value, err, at_roundoff};
}

template <typename F>
QuadResult adaptive(const F& f, std::vector<double> cuts, double tol, std::size_t max_intervals) {
    std::priority_queue<Segment, std::vector<Segment>, ByError> open;
    double value = 0.0;
    double error = 0.0;
    double frozen_value = 0.0;
    double frozen_error = 0.0;
    std::size_t count = 0;

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        Segment s = kronrod21(f, cuts[i], cuts[i + 1]);
        value += s.value;
        error += s.error;
        open.push(s);
        ++count;
    }

    std::size_t since_resum = 0;
    while (error + frozen_error > tol && frozen_error <= tol && !open.empty()) {
        if (count >= max_intervals) {
            throw QuadratureError("integrate: subdivision budget of " + std::to_string(max_intervals) +
                                      " intervals exhausted",
                                  value + frozen_value, error + frozen_error);
        }
        Segment worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        // Splitting cannot help when the segment is too narrow to bisect or
        // its error is already the roundoff floor: freeze it.
        if (worst.at_roundoff || !(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) <= 8.0 * kEps * std::max(std::fabs(worst.a), std::fabs(worst.b))) {
            value -= worst.value;
            error -= worst.error;
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        Segment left = kronrod21(f, worst.a, mid);
        Segment right = kronrod21(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        open.push(left);
        open.push(right);
        ++count;

        // Running sums drift; recompute them from the heap periodically.
        if (++since_resum == 256) {
            since_resum = 0;
            auto copy = open;
            value = 0.0;
            error = 0.0;
            while (!copy.empty()) {
                value += copy.top().value;
                error += copy.top().error;
                copy.pop();
            }
        }
    }

    if (error + frozen_error > tol) {
        throw QuadratureError("integrate: tolerance not reached; integrand not resolvable in double precision",
                              value + frozen_value, error + frozen_error);
    }
    return {value + frozen_value, std::max(0.0, error + frozen_error), count};
}

void check_finite(double fx, double x) {
    if (!std::isfinite(fx)) {
        throw EvaluationError("integrate: integrand is not finite at x = " + std::to_string(x), x);
    }
}

}  // namespace

IntegrationDomain IntegrationDomain::finite(double lo, double hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo)) {
        throw DomainError("IntegrationDomain::finite requires finite lo < hi");
    }
    return {Kind::finite, lo, hi, 0.0};
}

IntegrationDomain IntegrationDomain::semi_infinite(double lo, double scale) {
    if (!std::isfinite(lo) || !(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("IntegrationDomain::semi_infinite requires finite lo and scale > 0");
    }
    return {Kind::semi_infinite, lo, std::numeric_limits<double>::infinity(), scale};
}

double IntegrationDomain::effective_upper() const {
    if (kind_ == Kind::finite) return hi_;
    return lo_ + scale_ * 53.0 * std::log(2.0);
}

QuadResult integrate(const RealFunction& f, const IntegrationDomain& domain, double tol,
                     std::span<const double> breakpoints, std::size_t max_intervals) {
    if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");

    if (domain.kind() == IntegrationDomain::Kind::finite) {
        std::vector<double> cuts{domain.lo(), domain.hi()};
        for (double b : breakpoints)
            if (b > domain.lo() && b < domain.hi()) cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto g = [&f](double x) {
            const double fx = f(x);
            check_finite(fx, x);
            return fx;
        };
        return adaptive(g, std::move(cuts), tol, max_intervals);
    }

    const double lo = domain.lo();
    const double scale = domain.scale();
    std::vector<double> cuts{0.0, 1.0};
    for (double b : breakpoints)
        if (b > lo) cuts.push_back(-std::expm1(-(b - lo) / scale));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto g = [&f, lo, scale](double u) {
        const double w = 1.0 - u;
        if (!(w > 0.0)) return 0.0;
        const double x = lo - scale * std::log1p(-u);
        const double fx = f(x);
        check_finite(fx, x);
        const double v = fx * scale / w;
        return std::fabs(v) < kNegligible ? 0.0 : v;
    };
    return adaptive(g, std::move(cuts), tol, max_intervals);
}

QuadResult integrate_measure(const RealFunction& h, const Measure& m, double tol) {
    const PiecewiseSmoothFn& density = m.density();
    auto integrand = [&](double x) { return density(x) * h(x); };
    QuadResult r = integrate(integrand, IntegrationDomain::finite(density.support_lo(), density.support_hi()),
                             tol, density.breakpoints());
    for (const Atom& atom : m.atoms()) {
        const double hv = h(atom.location);
        check_finite(hv, atom.location);
        r.value += atom.mass * hv;
    }
    return r;
}

FixedRule composite_rule(double lo, double hi, std::size_t panels, std::span<const double> breakpoints) {
    if (!(hi > lo) || panels == 0) throw DomainError("composite_rule requires lo < hi and panels > 0");
    std::vector<double> cuts{lo, hi};
    for (double b : breakpoints)
        if (b > lo && b < hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    FixedRule rule;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double width = (cuts[s + 1] - cuts[s]) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            const double a = cuts[s] + width * static_cast<double>(p);
            const double center = a + 0.5 * width;
            const double half = 0.5 * width;
            for (int j = 0; j < 10; ++j) {
                rule.nodes.push_back(center - half * kXgk[j]);
                rule.weights.push_back(half * kWgk[j]);
                rule.nodes.push_back(center + half * kXgk[j]);
                rule.weights.push_back(half * kWgk[j]);
            }
            rule.nodes.push_back(center);
            rule.weights.push_back(half * kWgk[10]);
        }
    }
    return rule;
}

}  // namespace rankbound
