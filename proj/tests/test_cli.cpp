#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "affstr/io.hpp"
#include "cli.hpp"

using namespace affstr;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, FanJson)
{
    const auto r = run({"fan", "--algebra", "A2", "--cutoff", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto fan = fan_from_json(AlgebraSpec::preset("A2"), r.out);
    EXPECT_EQ(fan.vectors.size(), 23u);
    EXPECT_EQ(fan.vectors, build_fan(AlgebraSpec::preset("A2"), 2).vectors);

    const auto r0 = run({"fan", "--cutoff", "0"});
    EXPECT_EQ(std::count(r0.out.begin(), r0.out.end(), '\n'), 5);
}

TEST(Cli, ConfigErrors)
{
    EXPECT_EQ(run({"fan", "--algebra", "/no/such/algebra.json"}).code, 2);
    EXPECT_FALSE(run({"fan", "--algebra", "/no/such/algebra.json"}).err.empty());
    EXPECT_EQ(run({"fan", "--cutoff", "-1"}).code, 2);
    EXPECT_EQ(run({"fan", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run({"strings", "--level", "1", "--mu", "1,1"}).code, 2);
    EXPECT_EQ(run({"strings", "--level", "2", "--mu", "1"}).code, 2);
    EXPECT_EQ(run({"strings", "--level", "0"}).code, 2);
    EXPECT_EQ(run({"strings", "--mu", "x"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"mult", "--level", "1"}).code, 2);
}

TEST(Cli, AlgebraFile)
{
    const fs::path p = fs::temp_directory_path() / "affstr_cli_b2.json";
    std::ofstream(p) << R"({"label": "B2", "cartan": [[2,-1],[-2,2]], "symmetrizer": [2,1]})";
    const auto r = run({"fan", "--algebra", p.string(), "--cutoff", "2", "--verify"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::ofstream(p) << R"({"label": "bad", "cartan": [[2,1],[1,2]]})";
    EXPECT_EQ(run({"fan", "--algebra", p.string()}).code, 2);
}

TEST(Cli, StringsRoundTrip)
{
    const auto r = run({"strings", "--level", "2", "--mu", "0,0", "--cutoff", "10", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = string_table_from_json(AlgebraSpec::preset("A2"), r.out);
    EXPECT_EQ(t.coefficients(0, 10), Integer(3736));
    EXPECT_EQ(t.coefficients(1, 10), Integer(2736));
    EXPECT_EQ(string_table_to_json(t), r.out);
}

TEST(Cli, StringsText)
{
    const auto r = run({"strings", "--level", "1", "--cutoff", "20"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("24842"), std::string::npos);
    const auto r4 = run({"strings", "--level", "4", "--mu", "1,1", "--cutoff", "9", "--verify"});
    ASSERT_EQ(r4.code, 0) << r4.err;
    EXPECT_NE(r4.out.find("2 10 40 133 398 1084 2760 6632 15214 33508"), std::string::npos);
    EXPECT_NE(r4.out.find("0 2 12 49 166 494 1340 3387 8086 18415"), std::string::npos);
    EXPECT_NE(r4.err.find("oracle check passed"), std::string::npos);
}

TEST(Cli, Deterministic)
{
    for (const std::vector<std::string>& args : {
             std::vector<std::string>{"strings", "--level", "4", "--mu", "2,2", "--cutoff", "6", "--format", "csv"},
             std::vector<std::string>{"folded-fan", "--level", "2", "--mu", "1,0", "--cutoff", "6", "--format", "json"},
             std::vector<std::string>{"character", "--level", "2", "--cutoff", "2", "--format", "json"},
             std::vector<std::string>{"verify"},
         }) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.code, 0) << args[0];
        EXPECT_EQ(a.out, b.out) << args[0];
    }
}

TEST(Cli, FoldedFanJsonParses)
{
    const auto r = run({"folded-fan", "--level", "4", "--cutoff", "9", "--base", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto f = folded_fan_from_json(r.out);
    EXPECT_EQ(f.base_index, 1u);
    EXPECT_EQ(f.eta(2, 0), Integer(1));
    EXPECT_EQ(f.eta(2, 7), Integer(-1));
    EXPECT_EQ(run({"folded-fan", "--level", "4", "--base", "6"}).code, 2);
}

TEST(Cli, Mult)
{
    auto r = run({"mult", "--level", "1", "--weight", "0,0", "--grade", "-3", "--verify"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "10\n");
    r = run({"mult", "--level", "2", "--weight", "1,1", "--grade", "-4"});
    EXPECT_EQ(r.out, "32\n");
    r = run({"mult", "--level", "1", "--weight", "0,0", "--grade", "-2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"mult\": 5"), std::string::npos);
}

TEST(Cli, OutFile)
{
    const fs::path p = fs::temp_directory_path() / "affstr_cli_out.json";
    fs::remove(p);
    const auto r = run({"strings", "--level", "2", "--mu", "1,0", "--cutoff", "4", "--format", "json", "--out", p.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    const auto direct = run({"strings", "--level", "2", "--mu", "1,0", "--cutoff", "4", "--format", "json"});
    EXPECT_EQ(slurp(p), direct.out);
    EXPECT_EQ(run({"fan", "--out", "/no/such/dir/x.txt"}).code, 2);
}

TEST(Cli, VerifyAndEnvironment)
{
    ::setenv("AFFSTR_FIXTURES", AFFSTR_TEST_FIXTURES, 1);
    auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    r = run({"verify", "--inject-fault"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);

    const fs::path empty = fs::temp_directory_path() / "affstr_cli_empty";
    fs::remove_all(empty);
    fs::create_directories(empty);
    ::setenv("AFFSTR_FIXTURES", empty.c_str(), 1);
    r = run({"verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);

    ::setenv("AFFSTR_FIXTURES", "/no/such/fixture/dir", 1);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "--fixtures", AFFSTR_TEST_FIXTURES}).code, 0);
    ::unsetenv("AFFSTR_FIXTURES");
}

TEST(Cli, CharacterFormats)
{
    for (const char* f : {"text", "json", "csv"}) {
        const auto r = run({"character", "--level", "1", "--cutoff", "1", "--format", f});
        EXPECT_EQ(r.code, 0) << f;
        EXPECT_FALSE(r.out.empty());
    }
}
