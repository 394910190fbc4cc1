#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abelsnf/json_io.hpp"
#include "cli.hpp"

using namespace abelsnf;

namespace {

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

}  // namespace

TEST(Cli, SpectrumJson) {
  const auto r = run({"spectrum", "--group", "2^3", "--weights", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["integer_spectrum"], Json({{"-3", 1}, {"-1", 3}, {"1", 3}, {"3", 1}}));
}

TEST(Cli, SpectrumTable) {
  const auto r = run({"spectrum", "--group", "2^2", "--weights", "1", "--table"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("eigenvalue"), std::string::npos);
}

TEST(Cli, CriticalGroup) {
  const auto r = run({"critical-group", "--group", "2^2", "--weights", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["critical_group"], "Z/4");
  EXPECT_EQ(j["matrix_tree_check"], true);
}

TEST(Cli, DisconnectedGraphSkipsTreeCheck) {
  const auto r = run({"critical-group", "--group", "2^2", "--weights", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.err.find("disconnected"), std::string::npos);
}

TEST(Cli, PredictWithOracle) {
  const auto r = run({"predict", "--group", "7", "--elements", "(3),(4),(6)", "--prime", "2", "--check"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["predicted"]["per_power"], Json({{"0", 4}, {"1", 3}}));
  EXPECT_EQ(j["match"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"spectrum", "--group", "x", "--weights", "1"}).code, cli::kInputError);
  EXPECT_EQ(run({"nosuch"}).code, cli::kInputError);
  EXPECT_EQ(run({"predict", "--group", "2^3", "--weights", "1", "--prime", "2"}).code, cli::kHypothesisError);
  EXPECT_EQ(run({"snf", "--group", "2^10", "--weights", "1"}).code, cli::kResourceError);
  EXPECT_EQ(run({"spectrum", "--group", "2^3", "--weights", "1", "--cap-spectrum", "4"}).code,
            cli::kResourceError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, SnfFromMatrixFile) {
  const auto path = std::filesystem::temp_directory_path() / "abelsnf_cli_matrix.txt";
  {
    std::ofstream f(path);
    f << "2 2\n2 0\n0 6\n";
  }
  const auto r = run({"snf", "--matrix", path.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["snf"]["diagonal"], Json({2, 6}));
  const auto g = run({"smith-group", "--matrix", path.string(), "--table"});
  EXPECT_EQ(g.out, "Z/2 x Z/6\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"snf", "--matrix", path.string()}).code, cli::kInputError);
}

TEST(Cli, VerifyAndConjecture) {
  const auto v = run({"verify", "--group", "3,4", "--group", "5", "--max-prime", "13"});
  ASSERT_EQ(v.code, cli::kOk) << v.err;
  EXPECT_EQ(Json::parse(v.out)["mismatch"], 0);
  const auto c = run({"conjecture", "--n-max", "3", "--table"});
  ASSERT_EQ(c.code, cli::kOk);
  EXPECT_NE(c.out.find("evidence table"), std::string::npos);
}

TEST(Cli, ConfigFileFromEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "abelsnf_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"spectrum": 4})";
  }
  setenv("ABELSNF_CONFIG", path.c_str(), 1);
  const auto r = run({"spectrum", "--group", "2^3", "--weights", "1"});
  unsetenv("ABELSNF_CONFIG");
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, cli::kResourceError);
}
