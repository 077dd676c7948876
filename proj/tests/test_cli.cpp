#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quivermod/cli.hpp"

using namespace quivermod;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "quivermod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("quivermod_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

std::string edgeless(const char* field) {
  return std::string("vertices: 1\nalgebra: path\nd: 2\nv: 1\nfield: ") + field + "\n";
}

const char* kA2 =
    "vertices: 1 2\nedge: a 1 2\nalgebra: preprojective\ntruncation: 3\nd: 1 1\nv: 1 1\nfield: F2\n";

}  // namespace

TEST_F(Cli, CountEdgeless) {
  auto r = run({"count", file("f2.qm", edgeless("F2"))});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("rep: 3  gr: 3  AGREE"), std::string::npos) << r.out;
  r = run({"count", file("f3.qm", edgeless("F3"))});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("rep: 4  gr: 4  AGREE"), std::string::npos) << r.out;
  r = run({"count", "--side", "gr", file("g.qm", edgeless("F3"))});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("gr: 4"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("rep:"), std::string::npos) << r.out;
}

TEST_F(Cli, ParseErrorsAreUsageErrors) {
  auto r = run({"check", file("f4.qm", "vertices: 1\nd: 1\nv: 1\nfield: F4\n")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("f4.qm:4:9: error: characteristic must be prime"), std::string::npos) << r.err;
  r = run({"verify", file("loop.qm", "vertices: 1\nedge: l 1 1\nalgebra: preprojective\nd: 1\nv: 1\nfield: F2\n")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("preprojective algebra requires a quiver without edge-loops"), std::string::npos) << r.err;
  r = run({"check", path("missing.qm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"count", "--side", "sideways", file("s.qm", edgeless("F2"))}).code, kExitUsage);
  EXPECT_EQ(run({"count", file("q.qm", edgeless("Q"))}).code, kExitUsage);
}

TEST_F(Cli, CheckReportsDimensions) {
  const auto r = run({"check", file("a2.qm", kA2)});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("dim A = 4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dimension by degree: 2 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("valid"), std::string::npos);
  const auto bad = run({"check", file("bad.qm",
                                      "vertices: 1\nalgebra: explicit\nbasis: e1 1 1\nbasis: x 1 1\nd: 1\nv: 1\n"
                                      "field: F2\nmult: e1 e1 = 0\n")});
  EXPECT_EQ(bad.code, kExitVerificationFailed);
  EXPECT_NE(bad.out.find("INVALID"), std::string::npos) << bad.out;
}

TEST_F(Cli, VerifyWritesDeterministicJson) {
  const auto in = file("a2.qm", kA2);
  const auto r1 = run({"verify", in, "--out", path("one.json")});
  ASSERT_EQ(r1.code, kExitOk) << r1.err << r1.out;
  const auto r2 = run({"verify", in, "--out", path("two.json"), "--threads", "3"});
  ASSERT_EQ(r2.code, kExitOk);
  EXPECT_EQ(r1.out, r2.out);
  const auto j1 = slurp(path("one.json"));
  EXPECT_EQ(j1, slurp(path("two.json")));
  const auto j = nlohmann::json::parse(j1);
  EXPECT_EQ(j["mode"], "verify");
  EXPECT_EQ(j["count_gr"], j["count_rep"]["orbit_classes"]);
  EXPECT_EQ(j["count_rep"]["stable_over_gauge"], j["count_gr"]);
  EXPECT_TRUE(j["bijection_ok"].get<bool>());
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(j["instance"]["truncation"], 3);
}

TEST_F(Cli, InjectedFaultFailsVerification) {
  const auto r = run({"verify", file("a2.qm", kA2), "--inject-fault", "drop-framing"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("FAILED"), std::string::npos);
}

TEST_F(Cli, BudgetExceeded) {
  const auto r = run({"verify", file("a2.qm", kA2), "--budget", "10"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("--budget"), std::string::npos) << r.err;
}

TEST_F(Cli, SpotChecksOverQAreReproducible) {
  std::string text = kA2;
  text.replace(text.find("F2"), 2, "Q");
  const auto in = file("q.qm", text);
  const auto a = run({"verify", in, "--seed", "42", "--samples", "20", "--out", path("a.json")});
  const auto b = run({"verify", in, "--seed", "42", "--samples", "20", "--out", path("b.json")});
  EXPECT_EQ(a.code, kExitOk) << a.err << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_NE(a.out.find("20/20"), std::string::npos) << a.out;
}
