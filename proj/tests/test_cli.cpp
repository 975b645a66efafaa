#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace boolgb::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Drops the last CSV column (wall time) from every line.
std::string without_timing(const std::string& csv) {
  std::string out;
  for (const auto& line : lines(csv)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("boolgb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("BOOLGB_CAPS");
  }
  void TearDown() override {
    std::error_code ec;
    fs::remove_all(dir_, ec);
    unsetenv("BOOLGB_CAPS");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string generate(std::uint32_t n, const std::string& family = "H",
                       const std::string& order = "deglex") {
    std::string file = path(family + std::to_string(n) + order + ".txt");
    auto r = run_cli({"gen", "--n", std::to_string(n), "--family", family, "--order", order,
                      "--out", file});
    EXPECT_EQ(r.code, kOk) << r.err;
    return file;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenLineCounts) {
  auto h4 = lines(slurp(generate(4)));
  EXPECT_EQ(h4.size(), 18u);
  EXPECT_EQ(h4.front(), "# n=4 mode=full");
  EXPECT_EQ(lines(slurp(generate(2))).size(), 10u);
  EXPECT_EQ(lines(slurp(generate(2, "G"))).size(), 22u);

  auto r = run_cli({"gen", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(lines(r.out).size(), 14u);
  EXPECT_EQ(r.err, "family=H n=3 mode=full count=13 bitsize=1296 max_degree=3\n");

  auto boolean = run_cli({"gen", "--n", "2", "--engine", "boolean"});
  EXPECT_EQ(lines(boolean.out).front(), "# n=2 mode=boolean");
  EXPECT_EQ(lines(boolean.out).size(), 4u);
}

TEST_F(CliTest, GbMatchesPredictedSizes) {
  auto r = run_cli({"gb", generate(4)});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_basis_json(in).size(), 105u);

  auto text = run_cli({"gb", generate(3, "H", "degrevlex"), "--order", "degrevlex", "--format",
                       "text", "--stats"});
  ASSERT_EQ(text.code, kOk) << text.err;
  EXPECT_EQ(lines(text.out).size(), 46u);
  EXPECT_NE(text.err.find("basis_size=45"), std::string::npos);
  EXPECT_NE(text.err.find("pairs_generated="), std::string::npos);

  auto both = run_cli({"gb", generate(3), "--engine", "both", "--format", "text"});
  ASSERT_EQ(both.code, kOk) << both.err;
  EXPECT_EQ(both.out, run_cli({"gb", generate(3), "--format", "text"}).out);
}

TEST_F(CliTest, GbDumpsAreDeterministic) {
  std::string input = generate(3);
  auto a = run_cli({"gb", input});
  auto b = run_cli({"gb", input});
  EXPECT_EQ(a.out, b.out);
  std::string file = path("basis.json");
  ASSERT_EQ(run_cli({"gb", input, "--out", file}).code, kOk);
  EXPECT_EQ(slurp(file), a.out);
  EXPECT_FALSE(fs::exists(file + ".tmp"));
}

TEST_F(CliTest, VerifyExitCodes) {
  auto ok = run_cli({"verify", "--n", "3"});
  EXPECT_EQ(ok.code, kOk) << ok.out;
  EXPECT_EQ(lines(ok.out).size(), 5u);
  for (const char* id : {"V1 PASS", "V2 PASS", "V3 PASS", "V4 PASS"}) {
    EXPECT_NE(ok.out.find(id), std::string::npos) << id;
  }

  auto one = run_cli({"verify", "--n", "1"});
  EXPECT_EQ(one.code, kOk) << one.out;
  EXPECT_NE(one.out.find("V2 EXPECTED"), std::string::npos);
  EXPECT_NE(one.out.find("V3 EXPECTED"), std::string::npos);

  auto json = run_cli({"verify", "--n", "2", "--order", "degrevlex", "--format", "json"});
  EXPECT_EQ(json.code, kOk);
  EXPECT_NE(json.out.find("\"status\": \"PASS\""), std::string::npos);

  auto capped = run_cli({"verify", "--n", "4", "--max-pairs", "10"});
  EXPECT_EQ(capped.code, kResourceLimit);
  EXPECT_NE(capped.out.find("V3 SKIPPED"), std::string::npos);
}

TEST_F(CliTest, BenchTable) {
  auto r = run_cli({"bench", "--n", "2", "--n-max", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], kCsvHeader);
  EXPECT_EQ(rows[1].substr(0, rows[1].rfind(',')), "2,9,864,2,21,21,7,7");
  EXPECT_EQ(rows[2].substr(0, rows[2].rfind(',')), "3,13,1296,3,45,45,37,37");
  EXPECT_EQ(rows[3].substr(0, rows[3].rfind(',')), "4,17,1728,4,105,105,175,175");
  EXPECT_EQ(without_timing(r.out),
            without_timing(run_cli({"bench", "--n", "2", "--n-max", "4"}).out));

  auto capped = run_cli({"bench", "--n", "4", "--max-pairs", "10"});
  EXPECT_EQ(capped.code, kResourceLimit);
  EXPECT_NE(lines(capped.out).at(1).find(",incomplete,"), std::string::npos);

  auto json = run_cli({"bench", "--n", "2", "--format", "json"});
  EXPECT_EQ(json.code, kOk);
  EXPECT_NE(json.out.find("\"predictedGbCount\": 21"), std::string::npos);

  EXPECT_EQ(run_cli({"bench", "--n", "4", "--n-max", "3"}).code, kUsage);
}

TEST_F(CliTest, NormalFormAndMembership) {
  std::string gens = generate(2);
  std::string dump = path("h2.json");
  ASSERT_EQ(run_cli({"gb", gens, "--out", dump}).code, kOk);

  EXPECT_EQ(run_cli({"nf", dump, "x1*z1"}).out, "x1\n");
  EXPECT_EQ(run_cli({"nf", gens, "x1*z1"}).out, "x1\n");
  EXPECT_EQ(run_cli({"nf", dump, "z1*z2 + 1"}).out, "1\n");

  auto yes = run_cli({"member", dump, "x1*z1 + x1", "--oracle"});
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.out, "true\n");
  EXPECT_EQ(yes.err, "oracle agrees\n");
  auto no = run_cli({"member", gens, "x1", "--oracle"});
  EXPECT_EQ(no.code, kOk);
  EXPECT_EQ(no.out, "false\n");

  EXPECT_EQ(run_cli({"member", dump, "w1"}).code, kUsage);
  EXPECT_EQ(run_cli({"member", dump, "x1 +"}).code, kUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"gen"}).code, kUsage);
  EXPECT_EQ(run_cli({"gen", "--n", "2", "--order", "lex"}).code, kUsage);
  EXPECT_EQ(run_cli({"gb", path("missing.txt")}).code, kUsage);
  EXPECT_EQ(run_cli({"gen", "--n", "13", "--family", "G"}).code, kResourceLimit);

  std::ofstream(path("bad.txt")) << "# n=1 mode=full\nx1 * * y1\n";
  auto bad = run_cli({"gb", path("bad.txt")});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, CapsFromEnvironment) {
  Caps caps = parse_caps("max_pairs=10, max_basis=20;max_vars=9 max_n=4");
  EXPECT_EQ(caps.buchberger.max_pairs, 10u);
  EXPECT_EQ(caps.buchberger.max_basis, 20u);
  EXPECT_EQ(caps.enumeration.max_vars, 9u);
  EXPECT_EQ(caps.max_n, 4u);
  EXPECT_EQ(parse_caps("").buchberger.max_pairs, BuchbergerLimits{}.max_pairs);
  EXPECT_THROW(parse_caps("speed=3"), Error);
  EXPECT_THROW(parse_caps("max_pairs=0"), Error);
  EXPECT_THROW(parse_caps("max_pairs"), Error);

  std::string input = generate(4);
  setenv("BOOLGB_CAPS", "max_pairs=10", 1);
  EXPECT_EQ(run_cli({"gb", input}).code, kResourceLimit);
  // Command-line caps win over the environment.
  EXPECT_EQ(run_cli({"gb", input, "--max-pairs", "1000000"}).code, kOk);
  setenv("BOOLGB_CAPS", "nonsense", 1);
  EXPECT_EQ(run_cli({"gb", input}).code, kUsage);
}

TEST_F(CliTest, EnginesAgree) {
  std::string input = generate(3);
  auto full = run_cli({"gb", input, "--engine", "both", "--format", "text"});
  ASSERT_EQ(full.code, kOk) << full.err;
  auto boolean = run_cli({"gb", input, "--engine", "boolean", "--format", "text"});
  ASSERT_EQ(boolean.code, kOk) << boolean.err;
  EXPECT_EQ(lines(boolean.out).front(), "# n=3 mode=boolean");
  // The Boolean basis leaves the field polynomials implicit.
  EXPECT_EQ(lines(full.out).size(), 46u);
  EXPECT_LT(lines(boolean.out).size(), lines(full.out).size());
}

}  // namespace
}  // namespace boolgb::cli
