#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "qschur/cache.hpp"
#include "qschur/json_io.hpp"

using namespace qschur;
namespace fs = std::filesystem;

namespace {
fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  fs::path p = fs::temp_directory_path() / ("qschur-test-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(p);
  return p;
}
}  // namespace

TEST(Json, ScalarRoundTrip) {
  GaussianRational z(mpq_class(-3, 4), mpq_class(5, 2));
  json j = to_json(z);
  EXPECT_EQ(j["re"], "-3/4");
  EXPECT_EQ(j["im"], "5/2");
  EXPECT_EQ(scalar_from_json(j), z);
  EXPECT_EQ(scalar_from_json(json(7)), GaussianRational(7));
  EXPECT_EQ(scalar_from_json(json("1/3")), GaussianRational(mpq_class(1, 3)));
  EXPECT_THROW(scalar_from_json(json::array()), ParseError);
}

TEST(Json, ElementRoundTrip) {
  int n = 2, r = 2;
  QElement q(n, r);
  auto basis = super_matrices(n, r);
  for (size_t i = 0; i < basis.size(); i += 3) q.add_term(basis[i], GaussianRational(mpq_class(long(i) + 1, 3), 1));
  json j = to_json(q);
  EXPECT_EQ(qelement_from_json(parse_json(j.dump()), n, r), q);
}

TEST(Json, CanonicalTermOrder) {
  QElement q(2, 1);
  auto basis = super_matrices(2, 1);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) q.add_term(*it, 1);
  json j = to_json(q);
  for (size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(super_matrix_from_json(j[i]["matrix"]), basis[i]);
}

TEST(Json, SergeevRoundTrip) {
  int r = 3;
  SergeevElement e = SergeevElement::monomial(Permutation::from_images({2, 3, 1}), 0b101, GaussianRational(-2)) +
                     SergeevElement::clifford(2, r);
  EXPECT_EQ(sergeev_from_json(parse_json(to_json(e).dump()), r), e);
}

TEST(Json, MalformedInputsThrowParseError) {
  EXPECT_THROW(parse_json("{not json"), ParseError);
  EXPECT_THROW(super_matrix_from_json(parse_json(R"({"even":[[0]]})")), ParseError);
  EXPECT_THROW(super_matrix_from_json(parse_json(R"({"even":[[0,1],[0]],"odd":[[0,0],[0,0]]})")), ParseError);
  EXPECT_THROW(super_matrix_from_json(parse_json(R"({"even":[[0]],"odd":[[2]]})")), ParseError);
  EXPECT_THROW(super_matrix_from_json(parse_json(R"({"even":[[0]],"odd":[[0]]})"), 2), ParseError);
  EXPECT_THROW(sergeev_from_json(parse_json(R"([{"perm":[1,1]}])"), 2), ParseError);
}

TEST(Cache, MissThenByteIdenticalHit) {
  auto dir = fresh_dir("hit");
  TableCache c(dir.string());
  CacheKey k{2, 3, "structure-constants", "shape=upper0;engine=formula"};
  EXPECT_FALSE(c.get(k).has_value());
  std::string payload = "{\n  \"rows\": []\n}\n";
  ASSERT_TRUE(c.put(k, payload));
  auto hit = c.get(k);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit, payload);
  CacheKey other = k;
  other.input = "shape=upper1;engine=formula";
  EXPECT_FALSE(c.get(other).has_value());
  fs::remove_all(dir);
}

TEST(Cache, StaleVersionIsAMiss) {
  auto dir = fresh_dir("stale");
  TableCache c(dir.string());
  CacheKey k{1, 1, "structure-constants", "x"};
  ASSERT_TRUE(c.put(k, "fresh"));
  std::string path = c.path_for(k);
  {
    std::ofstream out(path, std::ios::trunc);
    json head{{"version", "0.0.0-old"}, {"n", 1}, {"r", 1}, {"op", "structure-constants"}, {"input", "x"}};
    out << head.dump() << "\nold";
  }
  EXPECT_FALSE(c.get(k).has_value());
  fs::remove_all(dir);
}

TEST(Cache, ConcurrentWritersLeaveAWholeFile) {
  auto dir = fresh_dir("race");
  TableCache c(dir.string());
  CacheKey k{2, 2, "op", "in"};
  std::string a(20000, 'a'), b(20000, 'b');
  std::vector<std::thread> ts;
  for (int t = 0; t < 8; ++t) ts.emplace_back([&, t] { c.put(k, t % 2 ? a : b); });
  for (auto& t : ts) t.join();
  auto hit = c.get(k);
  ASSERT_TRUE(hit.has_value());
  EXPECT_TRUE(*hit == a || *hit == b);
  fs::remove_all(dir);
}

TEST(Cache, EmptyDirectoryDisablesCaching) {
  TableCache c("");
  CacheKey k{1, 1, "op", "in"};
  EXPECT_FALSE(c.put(k, "x"));
  EXPECT_FALSE(c.get(k).has_value());
}

TEST(Cache, EnvironmentOverride) {
  setenv(kCacheEnvVar, "/tmp/qschur-env-test", 1);
  EXPECT_EQ(default_cache_dir(), "/tmp/qschur-env-test");
  unsetenv(kCacheEnvVar);
}
