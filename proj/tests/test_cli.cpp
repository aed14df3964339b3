#include <gtest/gtest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace pinnacle::cli {
namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"pinnacle"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, CountEmitsJson) {
    const auto r = run({"count", "--n", "3", "--set", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"count\":\"2\"}\n");
    EXPECT_EQ(r.err, "");
}

TEST(Cli, CountPlainFormat) {
    const auto r = run({"--format", "plain", "count", "--n", "3", "--set", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "count: 2\n");
}

TEST(Cli, CountMethodsAgree) {
    const auto fast = run({"count", "--n", "6", "--set", "3,5"});
    const auto oracle = run({"count", "--n", "6", "--set", "3,5", "--method", "oracle"});
    EXPECT_EQ(fast.code, 0);
    EXPECT_EQ(oracle.code, 0);
    EXPECT_EQ(fast.out, oracle.out);
}

TEST(Cli, CountModularResidue) {
    const auto r = run({"count", "--n", "100", "--set", "30,60,90", "--mod", "97"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.rfind("{\"count\":\"", 0) == 0) << r.out;
    const auto oracle = run({"count", "--n", "3", "--set", "3", "--method", "oracle", "--mod", "97"});
    EXPECT_EQ(oracle.out, "{\"count\":\"2\"}\n");
}

TEST(Cli, WeightedSumReportsBothSides) {
    const auto r = run({"wsum", "--n", "3", "--set", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"lhs\":\"16\",\"rhs\":\"16\",\"equal\":true}\n");
}

TEST(Cli, OrderingsWithRelabeledList) {
    const auto r = run({"orderings", "--set", "4,6", "--n", "7", "--i", "1", "--list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "{\"count\":\"6\",\"orderings\":"
              "[\"1,4,6\",\"1,6,4\",\"4,1,6\",\"4,6,1\",\"6,1,4\",\"6,4,1\"]}\n");
}

TEST(Cli, AdmissibleReportsBallotWord) {
    const auto good = run({"admissible", "--n", "7", "--set", "3,6,7"});
    EXPECT_EQ(good.code, 0);
    EXPECT_EQ(good.out, "{\"admissible\":true,\"ballot\":\"0010011\",\"reason\":\"\"}\n");
    const auto bad = run({"admissible", "--n", "4", "--set", "3,4"});
    EXPECT_EQ(bad.code, 0);
    EXPECT_TRUE(bad.out.rfind("{\"admissible\":false", 0) == 0) << bad.out;
}

TEST(Cli, ForestEncodeDecode) {
    const auto enc = run({"forest", "encode", "--n", "7", "--set", "4,6"});
    EXPECT_EQ(enc.code, 0);
    EXPECT_EQ(enc.out, "{\"forest\":\"1 ((2,3)4,5)6 7\"}\n");
    const auto dec = run({"forest", "decode", "--forest", "1 ((2,3)4,5)6 7"});
    EXPECT_EQ(dec.code, 0);
    EXPECT_EQ(dec.out, "{\"n\":7,\"set\":\"4,6\"}\n");
}

TEST(Cli, BijectionBothWays) {
    const auto fwd = run({"bijection", "f", "--walk", "U1R F1L D2L F1R U1R F2L D2L F1L F1R"});
    EXPECT_EQ(fwd.code, 0);
    EXPECT_EQ(fwd.out, "{\"cycle\":\"[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]\"}\n");
    const auto back = run({"bijection", "g", "--cycle", "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]",
                           "--set", "3,5,7,9"});
    EXPECT_EQ(back.code, 0);
    EXPECT_EQ(back.out, "{\"walk\":\"U1R F1L D2L F1R U1R F2L D2L F1L F1R\"}\n");
}

TEST(Cli, BijectionDefaultSetComesFromTheCycle) {
    // Without --set the candidate defaults to the cyclic pinnacles.
    const auto r = run({"bijection", "g", "--cycle", "[3r,2r,1r]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"walk\":\"F1R F1R\"}\n");
}

TEST(Cli, VerifySmallScan) {
    const auto r = run({"verify", "--max-n", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.rfind("{\"ok\":true", 0) == 0) << r.out;
    const auto plain = run({"--format", "plain", "verify", "--max-n", "1"});
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("PASS counts-match-enumeration"), std::string::npos) << plain.out;
}

TEST(Cli, BenchRunsASingleCell) {
    const auto r = run({"bench", "--k", "3", "--n", "1000", "--mod", "97"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"cells\":[{\"k\":3,\"n\":1000,"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"count\":\"60\""), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"ratio_spread\":1.0"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"count", "--n", "3"}).code, 2);                            // missing --set
    EXPECT_EQ(run({"nosuch"}).code, 2);                                       // unknown subcommand
    EXPECT_EQ(run({"count", "--n", "3", "--set", "3", "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"count", "--n", "-1", "--set", ""}).code, 2);              // negative n
    EXPECT_EQ(run({"verify", "--max-n", "99"}).code, 2);                      // past the scan guard
}

TEST(Cli, DomainErrorsExitTwoWithAMessage) {
    const auto mod = run({"count", "--n", "3", "--set", "3", "--mod", "6"});
    EXPECT_EQ(mod.code, 2);
    EXPECT_EQ(mod.err, "error: modulus must be an odd prime, got 6\n");
    const auto range = run({"count", "--n", "3", "--set", "5"});
    EXPECT_EQ(range.code, 2);
    EXPECT_EQ(range.err, "error: candidate value 5 outside [1, 3]\n");
    const auto bench = run({"bench", "--k", "5", "--n", "14"});
    EXPECT_EQ(bench.code, 2);
    EXPECT_EQ(bench.err, "error: bench needs 1 <= k and n >= 3k, got k=5 n=14\n");
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"count", "--help"}).code, 0);
}

}  // namespace
}  // namespace pinnacle::cli
