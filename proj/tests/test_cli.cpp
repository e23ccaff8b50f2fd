#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "support/fixtures.hpp"

using namespace intpat;
namespace fs = std::filesystem;

namespace {

const std::string kExample = intpat::testing::kDataDir + "/example.csv";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const auto path = fs::temp_directory_path() / ("intpat_test_" + name);
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, ResolveMinSupport) {
    EXPECT_EQ(cli::resolve_min_support("3", 5), 3u);
    EXPECT_EQ(cli::resolve_min_support("60%", 5), 3u);
    EXPECT_EQ(cli::resolve_min_support("61%", 5), 4u);
    EXPECT_EQ(cli::resolve_min_support("100%", 5), 5u);
    EXPECT_EQ(cli::resolve_min_support("0.1%", 5), 1u);
    EXPECT_EQ(cli::resolve_min_support("50%", 4185), 2093u);
    EXPECT_THROW(cli::resolve_min_support("0", 5), cli::UsageError);
    EXPECT_THROW(cli::resolve_min_support("0%", 5), cli::UsageError);
    EXPECT_THROW(cli::resolve_min_support("6", 5), cli::UsageError);
    EXPECT_THROW(cli::resolve_min_support("101%", 5), cli::UsageError);
    EXPECT_THROW(cli::resolve_min_support("x", 5), cli::UsageError);
    EXPECT_THROW(cli::resolve_min_support("-1", 5), cli::UsageError);
}

TEST(Cli, MineClosed) {
    const auto r = run({"mine", kExample, "--min-support", "1", "--sort", "--report", "/dev/null"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto recs = lines(r.out);
    EXPECT_EQ(recs.size(), oracle_closed(intpat::testing::running_example(), 1).size());
    for (const auto& j : recs) {
        EXPECT_TRUE(j.contains("pattern"));
        EXPECT_EQ(j["support"], j["extent"].size());
        EXPECT_FALSE(j.contains("closure"));
    }
}

TEST(Cli, MineGeneratorsOnProjectionWithPercentage) {
    for (const char* store : {"trie", "hash"}) {
        const auto r = run({"mine", kExample, "--mode", "generators", "--store", store, "--min-support", "60%",
                            "--attributes", "m1,m3", "--report", "/dev/null"});
        ASSERT_EQ(r.code, 0) << r.err;
        std::set<std::string> patterns;
        for (const auto& j : lines(r.out)) {
            patterns.insert(j["pattern"].dump());
            EXPECT_GE(j["support"].get<int>(), 3);
            EXPECT_TRUE(j.contains("closure"));
        }
        EXPECT_TRUE(patterns.contains("[[4,6],[5,8]]"));
        EXPECT_TRUE(patterns.contains("[[4,5],[4,8]]"));
    }
}

TEST(Cli, MineIsDeterministicWithSort) {
    const auto a = run({"mine", kExample, "--mode", "generators", "--sort", "--report", "/dev/null"});
    const auto b = run({"mine", kExample, "--mode", "generators", "--sort", "--store", "hash", "--report", "/dev/null"});
    EXPECT_EQ(a.out, b.out);
    const auto c = run({"mine", kExample, "--sort", "--parallel", "--report", "/dev/null"});
    const auto d = run({"mine", kExample, "--sort", "--report", "/dev/null"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, MineReportGoesToStderr) {
    const auto r = run({"mine", kExample});
    ASSERT_EQ(r.code, 0);
    const auto report = Json::parse(r.err);
    EXPECT_EQ(report["patterns"], 18);
    EXPECT_EQ(report["mode"], "closed");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"mine", kExample, "--min-support", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"mine", kExample, "--min-support", "6"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"mine", kExample, "--mode", "frequent"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"mine", kExample, "--store", "btree"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"mine"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"mine", "/nonexistent.csv"}).code, cli::kExitData);
    const auto bad = write_temp("bad.csv", "m1,m2\n1,abc\n");
    const auto r = run({"mine", bad.string()});
    EXPECT_EQ(r.code, cli::kExitData);
    EXPECT_NE(r.err.find("abc"), std::string::npos);
    EXPECT_EQ(run({"mine", kExample, "--attributes", "m9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"oracle", kExample, "--cap", "10"}).code, cli::kExitData);
}

TEST(Cli, ScaleMatchesGolden) {
    const auto r = run({"scale", kExample});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(intpat::testing::kGoldenDir + "/example_scaled.csv");
    std::ostringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(r.out, golden.str());

    const auto j = run({"scale", kExample, "--format", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(Json::parse(j.out)["items"].size(), 20u);

    const auto one = write_temp("one.csv", "x\n3\n1\n3\n");
    const auto r1 = run({"scale", one.string()});
    ASSERT_EQ(r1.code, 0);
    EXPECT_EQ(r1.out.substr(0, r1.out.find('\n')), "id,x<=1,x<=3,x>=1,x>=3");

    const auto empty = write_temp("empty.csv", "id\ng1\n");
    EXPECT_EQ(run({"scale", empty.string()}).code, cli::kExitData);
    EXPECT_EQ(run({"scale", kExample, "--format", "xml"}).code, cli::kExitUsage);
}

TEST(Cli, OracleEmitsAllViews) {
    const auto closed = run({"oracle", kExample});
    ASSERT_EQ(closed.code, 0);
    EXPECT_EQ(lines(closed.out).size(), 18u);
    const auto gens = run({"oracle", kExample, "--emit", "generators", "--min-support", "2"});
    EXPECT_EQ(lines(gens.out).size(), 28u);
    const auto cls = run({"oracle", kExample, "--emit", "classes", "--attributes", "m1,m3", "--min-support", "3"});
    bool found = false;
    for (const auto& j : lines(cls.out))
        if (j["closed"].dump() == "[[4,5],[5,8]]") {
            found = true;
            EXPECT_EQ(j["generators"].dump(), "[[[4,5],[4,8]],[[4,6],[5,8]]]");
        }
    EXPECT_TRUE(found);
}

TEST(Cli, BenchAgreesWithOracle) {
    const auto csv = fs::temp_directory_path() / "intpat_test_bench.csv";
    const auto r = run({"bench", kExample, "--min-supports", "1,2,60%,5", "--check-oracle", "--csv", csv.string()});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("per_closed"), std::string::npos);
    std::ifstream in(csv);
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    EXPECT_EQ(rows, 1u + 4 * 3); // header, then closed + two stores per support
}

TEST(Cli, Stats) {
    const auto r = run({"stats", kExample, "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["search_space_size"], "360");
    EXPECT_EQ(j["fcip"], 18);
    EXPECT_EQ(j["fipg"], 44);
    EXPECT_EQ(j["fcip_ratio"], "5.000e-02");

    const auto one = write_temp("single.csv", "m\n4\n4\n");
    const auto s = Json::parse(run({"stats", one.string(), "--json"}).out);
    EXPECT_EQ(s["fcip_ratio"], "1.000e+00");
    EXPECT_EQ(s["fipg_ratio"], "1.000e+00");
}

TEST(Cli, Redundancy) {
    const auto r = run({"redundancy", kExample, "--witnesses", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("31487"), std::string::npos);
    EXPECT_NE(r.out.find("\"subsumed\":[[4,4],[7,9],[4,5]]"), std::string::npos);
}
