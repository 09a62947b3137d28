#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>

#include "qschur/json_io.hpp"

using namespace qschur;
namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QSCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kX = R"('{"even":[[0,0],[0,0]],"odd":[[0,1],[0,0]]}')";
const char* kA = R"('{"even":[[0,0],[0,0]],"odd":[[0,0],[1,0]]}')";
}  // namespace

TEST(Cli, SpotProductBothEngines) {
  auto r = run(std::string("product --n 2 --r 1 --x ") + kX + " --a " + kA + " --engine both");
  ASSERT_EQ(r.code, 0);
  json j = parse_json(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_TRUE(j["diff"].empty());
  ASSERT_EQ(j["formula"].size(), 1u);
  EXPECT_EQ(j["formula"][0]["coeff"]["re"], "-1/1");
  EXPECT_EQ(j["formula"][0]["matrix"]["even"], json::parse("[[1,0],[0,0]]"));
}

TEST(Cli, BasisOfQ11HasTwoKeys) {
  auto r = run("basis --n 1 --r 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["basis"].size(), 2u);
}

TEST(Cli, VerifySection3Alias) {
  auto r = run("verify --suite section3 --n 2 --rmax 3");
  ASSERT_EQ(r.code, 0);
  json j = parse_json(r.out);
  EXPECT_EQ(j["suite"], "section3");
  EXPECT_EQ(j["failures"], 0);
  EXPECT_GT(j["cases"].get<int>(), 0);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("basis --n 1").code, 2);
  EXPECT_EQ(run("product --n 2 --r 1 --x '{oops' --a '{}'").code, 2);
  EXPECT_EQ(run(std::string("product --n 2 --r 2 --x ") + kX + " --a " + kA).code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("structure-constants --n 2 --r 1 --shape sideways --no-cache").code, 2);
}

TEST(Cli, StructureConstantsCacheIsByteIdentical) {
  std::random_device rd;
  fs::path dir = fs::temp_directory_path() / ("qschur-cli-cache-" + std::to_string(rd()));
  std::string args = "structure-constants --n 2 --r 2 --shape upper1 --cache-dir " + dir.string();
  auto cold = run(args);
  ASSERT_EQ(cold.code, 0);
  EXPECT_FALSE(fs::is_empty(dir));
  auto warm = run(args);
  ASSERT_EQ(warm.code, 0);
  EXPECT_EQ(cold.out, warm.out);
  auto uncached = run("structure-constants --n 2 --r 2 --shape upper1 --no-cache");
  EXPECT_EQ(cold.out, uncached.out);
  json j = parse_json(cold.out);
  EXPECT_GT(j["rows"].size(), 0u);
  for (const auto& row : j["rows"]) {
    EXPECT_TRUE(row.contains("h"));
    EXPECT_TRUE(row.contains("A"));
    EXPECT_TRUE(row.contains("result"));
  }
  fs::remove_all(dir);
}

TEST(Cli, RealizeWithExpansion) {
  auto r = run(R"(realize --n 2 --rmax 2 --matrix '{"even":[[0,1],[0,0]],"odd":[[0,0],[0,0]]}' --j 1,0 --express)");
  ASSERT_EQ(r.code, 0);
  json j = parse_json(r.out);
  EXPECT_EQ(j["levels"].size(), 3u);
  EXPECT_TRUE(j.contains("triangular"));
  EXPECT_EQ(run(R"(realize --n 2 --rmax 2 --matrix '{"even":[[1,0],[0,0]],"odd":[[0,0],[0,0]]}')").code, 2);
}
