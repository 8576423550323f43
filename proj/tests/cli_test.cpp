#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include <eulersum/cli.hpp>

#include "support.hpp"

using namespace eulersum;
using eulersum::cli::parse_nodes;
using eulersum::cli::run_cli;
using eulersum::testing::nodes;
using eulersum::testing::q;
using json = nlohmann::json;

namespace {

std::vector<Rational> as_rationals(const json& arr)
{
    std::vector<Rational> out;
    for (const auto& v : arr) {
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

struct ProcessResult {
    int exit_code;
    std::string out;
};

ProcessResult run_process(const std::string& args)
{
    std::string cmd = std::string(EULERSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(ParseNodes, Examples)
{
    EXPECT_EQ(parse_nodes("3, 8, 12, 15, 17, 18"), nodes({3, 8, 12, 15, 17, 18}));
    EXPECT_EQ(parse_nodes("1/2 -3 7/3"), NodeSet({q(-3), q(1, 2), q(7, 3)}));
    EXPECT_THROW(parse_nodes("2 2 5"), DuplicateNode);
    EXPECT_THROW(parse_nodes(" ,, "), EmptyNodeSet);
}

TEST(ParseNodes, ReportsTokenAndPosition)
{
    try {
        parse_nodes("1, 2, x7, 4");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6U);
        EXPECT_EQ(e.token(), "x7");
    }
    EXPECT_THROW(parse_nodes("1/0"), ParseError);
    EXPECT_THROW(parse_nodes("1.5"), ParseError);
}

TEST(ParseNodes, ReadsFile)
{
    auto path = std::filesystem::temp_directory_path() / "eulersum_nodes_test.txt";
    {
        std::ofstream out(path);
        out << "3 8 12\n15, 17,\n18\n";
    }
    EXPECT_EQ(parse_nodes("@" + path.string()), nodes({3, 8, 12, 15, 17, 18}));
    std::filesystem::remove(path);
    EXPECT_THROW(parse_nodes("@/nonexistent/nodes.txt"), Error);
}

TEST(ParseNodes, RoundTripsRenderedNodes)
{
    auto corpus = eulersum::testing::random_corpus(8, 100, 1, 8);
    for (const auto& ns : corpus) {
        std::string text;
        for (const auto& v : ns.values()) {
            text += v.str() + ", ";
        }
        EXPECT_EQ(parse_nodes(text), ns);
    }
}

TEST(Cli, TableJsonMatchesPaperValues)
{
    auto r = run_cli({"table", "3 8 12 15 17 18", "--nmax", "6", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["verb"], "table");
    EXPECT_EQ(doc["m"], 6);
    EXPECT_EQ(doc["all_identities_hold"], true);
    ASSERT_EQ(doc["rows"].size(), 7U);
    const std::vector<std::string> sums{"0", "0", "0", "0", "0", "1", "73"};
    for (std::size_t n = 0; n < 7; ++n) {
        EXPECT_EQ(doc["rows"][n]["n"], n);
        EXPECT_EQ(doc["rows"][n]["sum"], sums[n]);
        EXPECT_EQ(doc["rows"][n]["expected"], sums[n]);
        EXPECT_EQ(doc["rows"][n]["match"], true);
    }
    EXPECT_EQ(doc["rows"][5], json::parse(R"({"n":5,"sum":"1","expected":"1","match":true})"));
}

TEST(Cli, TableTextDefaultsToMPlusFour)
{
    auto r = run_cli({"table", "1 2 3"});
    ASSERT_EQ(r.exit_code, 0);
    // header lines plus n = 0..7
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 + 8);
}

TEST(Cli, WeightsTextAndJson)
{
    auto text = run_cli({"weights", "2 5 7 8"});
    ASSERT_EQ(text.exit_code, 0);
    EXPECT_NE(text.out.find("-90"), std::string::npos);
    EXPECT_NE(text.out.find("(1 - 5 + 9 - 5)/45 = 0"), std::string::npos);

    auto r = run_cli({"weights", "0 1", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0);
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["nodes"], json::parse(R"(["0","1"])"));
    EXPECT_EQ(doc["m"], 2);
    EXPECT_EQ(doc["products"], json::parse(R"(["-1","1"])"));

    auto six = json::parse(run_cli({"weights", "3 8 12 15 17 18", "--format", "json"}).out);
    EXPECT_EQ(six["scale"], "36");
    EXPECT_EQ(six["common_denominator"]["denominator"], "3150");
    EXPECT_EQ(six["common_denominator"]["numerators"], json::parse(R"(["1","-9","35","-75","90","-42"])"));
}

TEST(Cli, DecomposeJson)
{
    auto r = run_cli({"decompose", "1 2", "--n", "2", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0);
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["decomposition"]["polynomial_part"], json::parse(R"(["1"])"));
    EXPECT_EQ(doc["decomposition"]["residues"], json::parse(R"(["-1","4"])"));
    EXPECT_EQ(doc["decomposition"]["reconstructs"], true);

    auto text = run_cli({"decompose", "3 8 12 15 17 18"});
    EXPECT_NE(text.out.find("polynomial part: x + 73"), std::string::npos);
}

TEST(Cli, SymmetricJson)
{
    auto r = run_cli({"symmetric", "1 2 3", "--kmax", "3", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0);
    auto t = json::parse(r.out)["tables"];
    EXPECT_EQ(as_rationals(t["e"]), eulersum::testing::qs({1, 6, 11, 6}));
    EXPECT_EQ(as_rationals(t["h_via_elementary"]), eulersum::testing::qs({1, 6, 25, 90}));
    EXPECT_EQ(t["h_via_power_sums"], t["h_via_elementary"]);
    EXPECT_EQ(t["h_brute_force"], t["h_via_elementary"]);
    EXPECT_EQ(t["p_via_newton"], t["p"]);
}

TEST(Cli, JsonAgreesWithTextMode)
{
    auto text = run_cli({"table", "1/2 -3 7/3", "--nmax", "5"});
    auto doc = json::parse(run_cli({"table", "1/2 -3 7/3", "--nmax", "5", "--format", "json"}).out);
    for (const auto& row : doc["rows"]) {
        Rational sum = Rational::parse(row["sum"].get<std::string>());
        EXPECT_EQ(sum, euler_sum(parse_nodes("1/2 -3 7/3"), row["n"].get<std::int64_t>()));
        EXPECT_NE(text.out.find(sum.str()), std::string::npos);
    }
}

TEST(Cli, VerifyExitCodes)
{
    EXPECT_EQ(run_cli({"verify", "1/2 -3 7/3", "--nmax", "9"}).exit_code, 0);
    EXPECT_EQ(run_cli({"verify", "2 2 5"}).exit_code, 2);
    EXPECT_EQ(run_cli({"verify", "2 x 5"}).exit_code, 2);
    EXPECT_EQ(run_cli({"verify", "7"}).exit_code, 0);
    EXPECT_EQ(run_cli({"bogus", "1 2"}).exit_code, 2);
    EXPECT_EQ(run_cli({"table"}).exit_code, 2);
    EXPECT_EQ(run_cli({"table", "1 2", "--format", "xml"}).exit_code, 2);
    EXPECT_EQ(run_cli({"decompose", "1 2", "--n", "-1"}).exit_code, 2);
}

TEST(Cli, VerifyOnRandomSets)
{
    auto corpus = eulersum::testing::random_corpus(55, 40, 1, 8);
    for (const auto& ns : corpus) {
        std::string text;
        for (const auto& v : ns.values()) {
            text += v.str() + " ";
        }
        auto r = run_cli({"verify", text, "--format", "json"});
        EXPECT_EQ(r.exit_code, 0) << text << "\n" << r.out;
        EXPECT_EQ(json::parse(r.out)["all_identities_hold"], true);
    }
}

TEST(CliProcess, ExitCodesFromBinary)
{
    EXPECT_EQ(run_process("verify \"1/2 -3 7/3\" --nmax 9").exit_code, 0);
    EXPECT_EQ(run_process("verify \"2 2 5\"").exit_code, 2);
    EXPECT_EQ(run_process("verify \"-3 1/2\"").exit_code, 0);
    auto help = run_process("--help");
    EXPECT_EQ(help.exit_code, 0);
    EXPECT_NE(help.out.find("verify"), std::string::npos);
}
