#include "aotoc/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "aotoc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = aotoc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(invoke({"--bogus", "enumerate", "--d", "2"}).code, 1);
    EXPECT_EQ(invoke({"enumerate"}).code, 1);
    EXPECT_EQ(invoke({"enumerate", "--d", "0"}).code, 1);
    EXPECT_EQ(invoke({"--format", "xml", "enumerate", "--d", "2"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
}

TEST(Cli, UnwritableOutputExitsOne) {
    const auto r = invoke({"--out", "/nonexistent-dir/out.json", "enumerate", "--d", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EnumerateCountsOnly) {
    const auto r = invoke({"enumerate", "--d", "10", "--counts-only"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "244\n");
}

TEST(Cli, EnumerateListsClasses) {
    const auto r = invoke({"enumerate", "--d", "4"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("classes").size(), 11u);
}

TEST(Cli, QrfEtaGridReachesZero) {
    const auto r = invoke({"qrf", "--frame", "2", "--eta-grid", "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 64u);
    double lo = 1.0;
    for (const auto& rec : j) lo = std::min(lo, rec.at("lta_exact").get<double>());
    EXPECT_NEAR(lo, 0.0, 1e-10);
}

TEST(Cli, ConjectureCoversEveryClass) {
    const auto r = invoke({"conjecture", "--d", "4", "--restarts", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("classes").size(), 11u);
    EXPECT_EQ(j.at("violations").get<int>(), 0);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
    const std::vector<std::string> args = {"--seed", "5", "conjecture", "--d", "3", "--restarts", "2"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    EXPECT_EQ(invoke(threaded).out, a.out);
}

TEST(Cli, StabilizerSweepThreadIndependent) {
    const auto a = invoke({"stabilizer-sweep", "--h", "1", "--theta-steps", "5"});
    const auto b = invoke({"--threads", "2", "stabilizer-sweep", "--h", "1", "--theta-steps", "5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvHeader) {
    const auto r = invoke({"--format", "csv", "qrf", "--frame", "2", "--eta-grid", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "param,lta_exact,lta_nrc,lta_nrc_plus,gaussian_rate,mutual_info");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, WritesToFile) {
    const auto path = std::filesystem::temp_directory_path() / "aotoc_cli_test.json";
    const auto r = invoke({"--out", path.string(), "enumerate", "--d", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j.at("classes").size(), 3u);
    std::filesystem::remove(path);
}

TEST(Cli, AotocCurveFit) {
    const auto r = invoke({"aotoc-curve", "--model", "tfim", "--n", "4", "--samples", "21"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("t").size(), 21u);
    EXPECT_EQ(j.at("aotoc").size(), 21u);
    const double c2 = j.at("fit").at("c2").get<double>();
    const double predicted = j.at("fit").at("predicted_c2").get<double>();
    EXPECT_NEAR(c2, predicted, 1e-2 * predicted);
}
