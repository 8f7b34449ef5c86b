#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

// stderr is discarded unless merge is set.
Outcome run(const std::string& args, bool merge = false) {
    const std::string cmd = std::string(RANKBOUND_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Outcome res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

}  // namespace

TEST(Cli, ConstantsJson) {
    const Outcome r = run("--format json constants");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "constants");
    EXPECT_EQ(j["seed"], 1);
    EXPECT_EQ(j["atoms"], "continuous");
    EXPECT_NEAR(j["phi0_hat_0"].get<double>(), 0.928129678568, 1e-11);
    EXPECT_NEAR(j["c"].get<double>(), 11.0280277174, 1e-9);
    EXPECT_NEAR(j["G_abs_phi_1"].get<double>(), 0.153536, 1e-5);
    EXPECT_NEAR(j["G_abs_dphi_1"].get<double>(), 0.366667, 1e-5);
    EXPECT_NEAR(j["G_abs_d2phi_1"].get<double>(), 0.332084, 1e-5);
    EXPECT_TRUE(j.contains("err_estimate"));
}

TEST(Cli, ConstantsTableShowsSeed) {
    const Outcome r = run("--seed 42 constants");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("seed 42"), std::string::npos);
    EXPECT_NE(r.out.find("phi0_hat_0"), std::string::npos);
}

TEST(Cli, FullAtomsChangeSecondOrderConstant) {
    const Outcome r = run("--format json --atoms full constants");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["atoms"], "full");
    EXPECT_GT(j["G_abs_d2phi_1"].get<double>(), 0.5);
}

TEST(Cli, BoundJson) {
    const Outcome r = run("--format json bound --a 0.48 --delta 0.5");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& rep = j["report"];
    for (const char* key : {"a", "delta", "phi0_hat0", "g_phi_1", "g_phi_a", "g_phi2_1", "g_phi2_a", "bracket", "H"})
        EXPECT_TRUE(rep.contains(key)) << key;
    EXPECT_NEAR(rep["H"].get<double>(), 6.498, 0.01);
}

TEST(Cli, BoundCsvHasConfigLineAndHeader) {
    const Outcome r = run("--format csv --seed 7 bound --a 0.5");
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_EQ(first.rfind("# seed=7", 0), 0u) << first;
    EXPECT_EQ(second, "field,value");
}

TEST(Cli, ScanIsDeterministic) {
    const Outcome a = run("--format csv scan --delta 0.5");
    const Outcome b = run("--format csv scan --delta 0.5");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    EXPECT_EQ(line, "a,H,bracket,g_phi_a,g_phi2_a");
    EXPECT_NE(a.out.find("# minimizer\n"), std::string::npos);
}

TEST(Cli, ScanJsonMinimizer) {
    const Outcome r = run("--format json scan --delta 0.5 --a-min 0.3 --a-max 0.7 --step 0.01");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 40u);
    EXPECT_NEAR(j["minimizer"]["a"].get<double>(), 0.48, 0.01);
    EXPECT_NEAR(j["minimizer"]["H"].get<double>(), 6.4975, 0.005);
    EXPECT_NEAR(j["slack_to_6_5"].get<double>(), 6.5 - j["minimizer"]["H"].get<double>(), 1e-9);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("bound").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("--tol 1e-20 constants").status, 2);
    EXPECT_EQ(run("--tol 1e-2 constants").status, 2);
    EXPECT_EQ(run("--format xml constants").status, 2);
    EXPECT_EQ(run("--atoms some constants").status, 2);
}

TEST(Cli, DomainErrorsExitTwo) {
    EXPECT_EQ(run("bound --a 1.5").status, 2);
    EXPECT_EQ(run("bound --a 0.5 --delta 0.7").status, 2);
    EXPECT_EQ(run("scan --a-min 0.7 --a-max 0.3").status, 2);
    const Outcome r = run("bound --a 1.0", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("(0, 1)"), std::string::npos) << r.out;
}

TEST(Cli, StepWiderThanRangeGivesSingleRow) {
    const Outcome r = run("--format csv scan --a-min 0.45 --a-max 0.46 --step 0.05");
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line;
    int data_rows = 0;
    std::getline(in, line);  // config comment
    std::getline(in, line);  // header
    while (std::getline(in, line) && line.rfind("#", 0) != 0) ++data_rows;
    EXPECT_EQ(data_rows, 1);
}

TEST(Cli, SieveTooSmallExitsTwo) {
    EXPECT_EQ(run("--sieve-limit 1000 verify --suite mollifier --M 5000 --delta 0.05").status, 2);
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run("--help").status, 0);
    EXPECT_EQ(run("scan --help").status, 0);
}

TEST(Cli, DetectorSuitePasses) {
    const Outcome r = run("--format json --seed 3 verify --suite detector --cases 60");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["seed"], 3);
    EXPECT_TRUE(j["passed"].get<bool>());
    for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, TooFewDetectorCasesFails) {
    EXPECT_EQ(run("verify --suite detector --cases 40").status, 1);
}

TEST(Cli, IdentitiesSuitePasses) {
    EXPECT_EQ(run("verify --suite identities").status, 0);
}

TEST(Cli, MollifierSuiteAtModerateDeltas) {
    const Outcome r = run("--format json verify --suite mollifier --delta 0.05 --delta 0.1");
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, FailedCheckExitsOne) {
    // At delta = 0.02 the main term for S is off by more than 10 delta M^{-2 a delta}.
    const Outcome r = run("--format json verify --suite mollifier --delta 0.02");
    EXPECT_EQ(r.status, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["passed"].get<bool>());
}
