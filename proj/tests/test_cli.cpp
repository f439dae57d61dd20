#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "tukey/cli.hpp"
#include "tukey/sample_matrix.hpp"

namespace fs = std::filesystem;
using namespace tukey;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tukeydepth");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("tukeydepth_cli_" + std::string(info->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& content) const {
        std::ofstream(path(name)) << content;
        return path(name);
    }

    static std::string slurp(const std::string& file) {
        std::ifstream in(file);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CdfPrintsValue) {
    auto r = invoke({"cdf", "--alpha", "0.5", "--x", "0"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "0.5\n");
    r = invoke({"cdf", "--alpha", "1", "--x", "1"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NEAR(std::stod(r.out), 0.75, 1e-8);
}

TEST_F(CliTest, CdfErrors) {
    EXPECT_EQ(invoke({"cdf", "--alpha", "3", "--x", "0"}).code, cli::kExitValidation);
    EXPECT_EQ(invoke({"cdf", "--alpha", "0.5"}).code, cli::kExitValidation);
    const auto budget = invoke({"cdf", "--alpha", "0.5", "--x", "1e7", "--segments", "3"});
    EXPECT_EQ(budget.code, cli::kExitNumerical);
    EXPECT_FALSE(budget.err.empty());
}

TEST_F(CliTest, DepthOfTriangle) {
    const auto tri = write("tri.csv", "-1,-1\n2,-1\n-1,2\n");
    auto r = invoke({"depth", "--points", tri, "--query", "0,0", "--method", "exact"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.substr(0, 4), "1/3 ");
    EXPECT_EQ(r.out, "1/3 (0.33333333333333331)\n");
    r = invoke({"depth", "--points", tri, "--query", "0,0", "--method", "brute"});
    EXPECT_EQ(r.out, "1/3 (0.33333333333333331)\n");
    r = invoke({"depth", "--points", tri, "--query", "0,0", "--method", "approx", "--k", "500"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.substr(0, 4), "1/3 ");
    r = invoke({"depth", "--points", tri, "--query", "9,9"});
    EXPECT_EQ(r.out.substr(0, 4), "0/3 ");
}

TEST_F(CliTest, DepthDiagnostics) {
    const auto tri = write("tri.csv", "-1,-1\n2,-1\n-1,2\n");
    const auto bad = write("bad.csv", "1,2\n3\n");
    auto r = invoke({"depth", "--points", bad, "--query", "0,0"});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("bad.csv:2"), std::string::npos) << r.err;
    r = invoke({"depth", "--points", tri, "--query", "0,0,0"});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("--query"), std::string::npos);
    r = invoke({"depth", "--points", tri, "--query", "0,0", "--method", "fancy"});
    EXPECT_EQ(r.code, cli::kExitValidation);
    r = invoke({"depth", "--points", path("missing.csv"), "--query", "0,0"});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("missing.csv"), std::string::npos);
}

TEST_F(CliTest, SampleWritesCsv) {
    const auto out = path("q.csv");
    auto r = invoke({"sample", "--law", "independent", "--alpha", "0.5", "--d", "3", "--n", "50", "--seed", "4",
                     "--out", out});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto sample = read_csv(out);
    EXPECT_EQ(sample.rows(), 50u);
    EXPECT_EQ(sample.dim(), 3u);
    const auto first = slurp(out);
    invoke({"sample", "--law", "independent", "--alpha", "0.5", "--d", "3", "--n", "50", "--seed", "4", "--out", out});
    EXPECT_EQ(slurp(out), first);
}

TEST_F(CliTest, SampleRejectsUnsupportedLaw) {
    auto r = invoke({"sample", "--law", "coupled", "--alpha", "0.3", "--d", "2", "--n", "10", "--out", path("p.csv")});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("0.3"), std::string::npos) << r.err;
    r = invoke({"sample", "--law", "elliptic", "--n", "10", "--out", path("p.csv")});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("elliptic"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownFlagsAndSubcommands) {
    auto r = invoke({"cdf", "--alpha", "0.5", "--x", "0", "--bogus", "1"});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("--bogus"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({}).code, cli::kExitValidation);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitValidation);
}

TEST_F(CliTest, HelpDocumentsEveryFlag) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> expected{
        {"sample", {"--law", "--alpha", "--d", "--n", "--seed", "--out"}},
        {"cdf", {"--alpha", "--x", "--tol", "--segments"}},
        {"depth", {"--points", "--query", "--method", "--k", "--seed", "--no-refine"}},
        {"verify", {"--config", "--d", "--alpha", "--n", "--seed", "--k", "--tol", "--csv", "--json", "--timing"}},
        {"converge", {"--sizes", "--out", "--d", "--n"}},
    };
    for (const auto& [sub, flags] : expected) {
        const auto r = invoke({sub, "--help"});
        EXPECT_EQ(r.code, cli::kExitOk) << sub;
        for (const auto& flag : flags) {
            EXPECT_NE(r.out.find(flag), std::string::npos) << sub << " " << flag;
        }
    }
    EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, VerifyWritesReportsDeterministically) {
    const std::vector<std::string> args{"verify", "--n", "2000", "--seed", "7", "--grid-step", "1",
                                        "--csv", path("r.csv"), "--json", path("r.json")};
    auto r = invoke(args);
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto csv = slurp(path("r.csv"));
    const auto json = slurp(path("r.json"));
    EXPECT_EQ(r.out, json);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "x_1,x_2,depth_closed_form,depth_P,depth_Q,err_P,err_Q,err_PQ");
    EXPECT_NE(json.find("\"sup_err_P\""), std::string::npos);
    EXPECT_EQ(json.find("runtime_seconds"), std::string::npos);
    invoke(args);
    EXPECT_EQ(slurp(path("r.csv")), csv);
    EXPECT_EQ(slurp(path("r.json")), json);
    auto timed = args;
    timed.push_back("--timing");
    EXPECT_NE(invoke(timed).out.find("runtime_seconds"), std::string::npos);
}

TEST_F(CliTest, VerifyConfigFileWithFlagOverride) {
    const auto cfg = write("exp.cfg", "# experiment\nn = 1000\nseed = 3\ngrid_step = 2\ncsv = " + path("a.csv") +
                                          "\njson = " + path("a.json") + "\n");
    auto r = invoke({"verify", "--config", cfg, "--seed", "9"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("\"n\": 1000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"seed\": 9"), std::string::npos) << r.out;
    EXPECT_TRUE(fs::exists(path("a.csv")));
    const auto bad = write("bad.cfg", "n = 1000\nbanana = 1\n");
    r = invoke({"verify", "--config", bad});
    EXPECT_EQ(r.code, cli::kExitValidation);
    EXPECT_NE(r.err.find("banana"), std::string::npos) << r.err;
    r = invoke({"verify", "--n", "50"});
    EXPECT_EQ(r.code, cli::kExitValidation);
}

TEST_F(CliTest, ConvergeTable) {
    auto r = invoke({"converge", "--sizes", "500,1000", "--grid-step", "1", "--seed", "2"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,sup_err_P,sup_err_Q,sup_err_PQ");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    EXPECT_EQ(invoke({"converge", "--sizes", "1000,500"}).code, cli::kExitValidation);
    EXPECT_EQ(invoke({"converge", "--sizes", "10,x"}).code, cli::kExitValidation);
}

TEST_F(CliTest, BinaryExitCodes) {
    const std::string bin = TUKEYDEPTH_CLI;
    auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " > " + path("o.txt") + " 2> " + path("e.txt")).c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("cdf --alpha 0.5 --x 0"), 0);
    EXPECT_EQ(slurp(path("o.txt")), "0.5\n");
    EXPECT_EQ(status("cdf --alpha 0.5 --x 1e7 --segments 3"), 1);
    EXPECT_EQ(status("cdf --alpha 7 --x 0"), 2);
    EXPECT_EQ(status("depth --help"), 0);
}
