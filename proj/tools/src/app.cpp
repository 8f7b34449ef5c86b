#include "app.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "output.hpp"
#include "rankbound/bound.hpp"
#include "rankbound/errors.hpp"
#include "rankbound/kernels.hpp"
#include "rankbound/testfn.hpp"
#include "suites.hpp"

namespace rankbound::cli {
namespace {

constexpr double kTarget = 6.5;

struct RunConfig {
    double tol = 1e-10;
    std::string format = "table";
    std::uint64_t seed = 1;
    std::uint32_t sieve_limit = 1000000;
    std::string atoms = "continuous";

    AtomPolicy policy() const {
        return atoms == "full" ? AtomPolicy::full_transform : AtomPolicy::continuous_transform;
    }
};

Json header(const std::string& command, const RunConfig& cfg) {
    Json j;
    j["command"] = command;
    j["seed"] = cfg.seed;
    j["tol"] = cfg.tol;
    j["atoms"] = cfg.atoms;
    return j;
}

std::string config_comment(const RunConfig& cfg) {
    return fmt::format("# seed={} tol={} atoms={}", cfg.seed, cfg.tol, cfg.atoms);
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
    const AtomPolicy policy = cfg.policy();
    struct Row {
        const char* key;
        double value;
        double err;
    };
    const QuadResult phi0 = laplace(limit_measure(0), 0.0, cfg.tol);
    const GValue g0 = g_psi(1.0, limit_measure(0), policy, cfg.tol);
    const GValue g1 = g_psi(1.0, limit_measure(1), policy, cfg.tol);
    const GValue g2 = g_psi(1.0, limit_measure(2), policy, cfg.tol);
    const std::vector<Row> rows{{"phi0_hat_0", phi0.value, phi0.err_estimate},
                                {"c", c_const(), 0.0},
                                {"G_abs_phi_1", g0.value, g0.err_estimate},
                                {"G_abs_dphi_1", g1.value, g1.err_estimate},
                                {"G_abs_d2phi_1", g2.value, g2.err_estimate}};

    const Format fmt_kind = parse_format(cfg.format);
    if (fmt_kind == Format::json) {
        Json j = header("constants", cfg);
        for (const auto& r : rows) j[r.key] = rounded(r.value);
        Json errs = Json::object();
        for (const auto& r : rows) errs[r.key] = rounded(r.err);
        j["err_estimate"] = errs;
        out << j.dump(2) << '\n';
        return kOk;
    }
    Sheet sheet{{"quantity", "value", "err_estimate"}, {}};
    const bool csv = fmt_kind == Format::csv;
    for (const auto& r : rows)
        sheet.rows.push_back({r.key, csv ? machine_number(r.value) : table_number(r.value),
                              csv ? machine_number(r.err) : table_number(r.err)});
    if (csv) {
        out << config_comment(cfg) << '\n';
        write_csv(out, sheet);
    } else {
        write_table(out, sheet);
        out << fmt::format("seed {}  tol {}  atoms {}\n", cfg.seed, cfg.tol, cfg.atoms);
    }
    return kOk;
}

Json report_json(const BoundReport& r) {
    Json j;
    j["a"] = rounded(r.a);
    j["delta"] = rounded(r.delta);
    j["phi0_hat0"] = rounded(r.phi0_hat0);
    j["g_phi_1"] = rounded(r.g_phi_1);
    j["g_phi_a"] = rounded(r.g_phi_a);
    j["g_phi2_1"] = rounded(r.g_phi2_1);
    j["g_phi2_a"] = rounded(r.g_phi2_a);
    j["bracket"] = rounded(r.bracket);
    j["H"] = rounded(r.H);
    return j;
}

int cmd_bound(double a, double delta, const RunConfig& cfg, std::ostream& out) {
    const BoundReport r = h_of_a(a, delta, cfg.policy(), cfg.tol);
    if (!r.consistent()) throw std::runtime_error("bound report failed its self-consistency check");
    const Format fmt_kind = parse_format(cfg.format);
    if (fmt_kind == Format::json) {
        Json j = header("bound", cfg);
        j["report"] = report_json(r);
        out << j.dump(2) << '\n';
        return kOk;
    }
    const std::vector<std::pair<const char*, double>> fields{
        {"a", r.a},           {"delta", r.delta},       {"phi0_hat0", r.phi0_hat0},
        {"g_phi_1", r.g_phi_1}, {"g_phi_a", r.g_phi_a}, {"g_phi2_1", r.g_phi2_1},
        {"g_phi2_a", r.g_phi2_a}, {"bracket", r.bracket}, {"H", r.H}};
    Sheet sheet{{"field", "value"}, {}};
    const bool csv = fmt_kind == Format::csv;
    for (const auto& [k, v] : fields) sheet.rows.push_back({k, csv ? machine_number(v) : table_number(v)});
    if (csv) {
        out << config_comment(cfg) << '\n';
        write_csv(out, sheet);
    } else {
        write_table(out, sheet);
        out << fmt::format("seed {}  tol {}  atoms {}\n", cfg.seed, cfg.tol, cfg.atoms);
    }
    return kOk;
}

int cmd_scan(double delta, double a_min, double a_max, double step, const RunConfig& cfg, std::ostream& out) {
    ScanOptions opts;
    opts.policy = cfg.policy();
    opts.tol = cfg.tol;
    const MinimizeResult m = minimize(delta, a_min, a_max, step, opts);
    for (const auto& r : m.coarse)
        if (!r.consistent()) throw std::runtime_error("scan report failed its self-consistency check");
    const double slack = kTarget - m.report.H;

    const Format fmt_kind = parse_format(cfg.format);
    if (fmt_kind == Format::json) {
        Json j = header("scan", cfg);
        j["delta"] = rounded(delta);
        j["a_min"] = rounded(a_min);
        j["a_max"] = rounded(a_max);
        j["step"] = rounded(step);
        Json rows = Json::array();
        for (const auto& r : m.coarse)
            rows.push_back(Json{{"a", rounded(r.a)},
                                {"H", rounded(r.H)},
                                {"bracket", rounded(r.bracket)},
                                {"g_phi_a", rounded(r.g_phi_a)},
                                {"g_phi2_a", rounded(r.g_phi2_a)}});
        j["rows"] = rows;
        j["minimizer"] = report_json(m.report);
        j["slack_to_6_5"] = rounded(slack);
        out << j.dump(2) << '\n';
        return kOk;
    }
    const bool csv = fmt_kind == Format::csv;
    auto num = [csv](double v) { return csv ? machine_number(v) : table_number(v); };
    Sheet sheet{{"a", "H", "bracket", "g_phi_a", "g_phi2_a"}, {}};
    for (const auto& r : m.coarse) sheet.rows.push_back({num(r.a), num(r.H), num(r.bracket), num(r.g_phi_a), num(r.g_phi2_a)});
    const auto& b = m.report;
    if (csv) {
        out << config_comment(cfg) << '\n';
        write_csv(out, sheet);
        out << "# minimizer\n";
        write_csv(out, Sheet{{}, {{num(b.a), num(b.H), num(b.bracket), num(b.g_phi_a), num(b.g_phi2_a)}}});
    } else {
        write_table(out, sheet);
        out << fmt::format("minimizer  a* = {}  H = {}  slack to 6.5 = {}\n", num(b.a), num(b.H), num(slack));
        out << fmt::format("seed {}  tol {}  atoms {}\n", cfg.seed, cfg.tol, cfg.atoms);
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const RunConfig& cfg, std::ostream& out) {
    std::vector<std::pair<std::string, Check>> checks;
    auto add = [&checks](const std::string& name, const std::vector<Check>& cs) {
        for (const auto& c : cs) checks.emplace_back(name, c);
    };
    if (suite == "identities" || suite == "all") add("identities", identities_suite(opts));
    if (suite == "detector" || suite == "all") add("detector", detector_suite(opts));
    if (suite == "mollifier" || suite == "all") add("mollifier", mollifier_suite(opts));

    bool all_pass = true;
    for (const auto& [s, c] : checks) all_pass = all_pass && c.pass;

    const Format fmt_kind = parse_format(cfg.format);
    if (fmt_kind == Format::json) {
        Json j = header("verify", cfg);
        j["suite"] = suite;
        Json arr = Json::array();
        for (const auto& [s, c] : checks)
            arr.push_back(Json{{"suite", s}, {"name", c.name}, {"value", rounded(c.value)}, {"limit", rounded(c.limit)},
                               {"pass", c.pass}});
        j["checks"] = arr;
        j["passed"] = all_pass;
        out << j.dump(2) << '\n';
    } else {
        const bool csv = fmt_kind == Format::csv;
        auto num = [csv](double v) { return csv ? machine_number(v) : table_number(v); };
        Sheet sheet{{"status", "suite", "check", "value", "limit"}, {}};
        for (const auto& [s, c] : checks) sheet.rows.push_back({c.pass ? "PASS" : "FAIL", s, c.name, num(c.value), num(c.limit)});
        if (csv) {
            out << config_comment(cfg) << '\n';
            write_csv(out, sheet);
        } else {
            write_table(out, sheet);
            int failed = 0;
            for (const auto& [s, c] : checks) failed += c.pass ? 0 : 1;
            out << fmt::format("{} of {} checks passed\n", checks.size() - failed, checks.size());
            out << fmt::format("seed {}  tol {}\n", cfg.seed, cfg.tol);
        }
    }
    return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical pipeline for an explicit average-rank constant"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "Quadrature tolerance")->check(CLI::Range(1e-14, 1e-4));
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "Seed for randomised suites");
    app.add_option("--sieve-limit", cfg.sieve_limit, "Sieve limit for arithmetic tables")->check(CLI::Range(10u, 100000000u));
    app.add_option("--atoms", cfg.atoms, "Point masses in the G transform term: continuous | full")
        ->check(CLI::IsMember({"continuous", "full"}));

    auto* constants = app.add_subcommand("constants", "Print the headline constants");

    double a = 0.48;
    double delta = 0.5;
    auto* bound = app.add_subcommand("bound", "Evaluate H(a, Delta)");
    bound->add_option("--a", a, "Shape parameter in (0, 1)")->required();
    bound->add_option("--delta", delta, "Delta in (0, 1/2]");

    double a_min = 0.30;
    double a_max = 0.70;
    double step = 0.01;
    double scan_delta = 0.5;
    auto* scan_cmd = app.add_subcommand("scan", "Scan H over a grid and refine the minimiser");
    scan_cmd->add_option("--delta", scan_delta, "Delta in (0, 1/2]");
    scan_cmd->add_option("--a-min", a_min, "Lower end of the grid");
    scan_cmd->add_option("--a-max", a_max, "Upper end of the grid (excluded)");
    scan_cmd->add_option("--step", step, "Coarse step");

    std::string suite = "all";
    SuiteOptions sopts;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "identities | detector | mollifier | all")
        ->check(CLI::IsMember({"identities", "detector", "mollifier", "all"}));
    verify->add_option("--M", sopts.M, "Mollifier length")->check(CLI::Range(10u, 100000000u));
    verify->add_option("--delta", sopts.deltas, "Mollifier delta values");
    verify->add_option("--cases", sopts.detector_cases, "Number of random detector cases")->check(CLI::Range(1, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*constants) return cmd_constants(cfg, out);
        if (*bound) return cmd_bound(a, delta, cfg, out);
        if (*scan_cmd) return cmd_scan(scan_delta, a_min, a_max, step, cfg, out);
        if (*verify) {
            sopts.tol = cfg.tol;
            sopts.seed = cfg.seed;
            sopts.sieve_limit = cfg.sieve_limit;
            return cmd_verify(suite, sopts, cfg, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TableError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what() << fmt::format(" (best {:.12g}, error {:.3g})", e.best_value(), e.best_error())
            << '\n';
        return kNumerical;
    } catch (const EvaluationError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    }
    return kUsage;
}

}  // namespace rankbound::cli
