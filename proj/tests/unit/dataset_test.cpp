#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sparsecenter/csv.hpp"
#include "sparsecenter/dataset.hpp"
#include "sparsecenter/errors.hpp"
#include "support/generators.hpp"

using namespace sparsecenter;

namespace {

std::string error_text(const std::string& csv, const LabelSpec& spec) {
  std::istringstream in(csv);
  try {
    read_csv(in, spec);
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("csv with named labels") {
  std::istringstream in("x,y,cls\n1,2,pos\n3,4,neg\n5,6,pos\n7,8,neg\n");
  const Dataset d = read_csv(in, {"cls", "pos", "neg"});
  CHECK(d.num_features() == 2);
  CHECK(d.num_samples() == 4);
  CHECK(d.features()(1, 2) == 6.0);
  CHECK(d.labels()[1] == Label::negative);
  REQUIRE(d.feature_names().has_value());
  CHECK((*d.feature_names())[1] == "y");
}

TEST_CASE("label column may sit anywhere") {
  std::istringstream in("label,a\n1,0.5\n-1,2.5\n");
  const Dataset d = read_csv(in, {});
  CHECK(d.num_features() == 1);
  CHECK(d.features()(0, 1) == 2.5);
}

TEST_CASE("numeric label cells match numerically") {
  std::istringstream in("a,label\n1,1.0\n2,-1.0\n3,+1\n");
  const Dataset d = read_csv(in, {});
  CHECK(d.num_positive() == 2);
}

// Rows are numbered as file lines, the header being row 1.
TEST_CASE("unknown label names the row") {
  const std::string msg = error_text("a,label\n1,1\n2,maybe\n3,-1\n", {});
  CHECK(msg.find("row 3") != std::string::npos);
  CHECK(msg.find("maybe") != std::string::npos);
}

TEST_CASE("single-class csv is rejected") {
  CHECK(error_text("a,label\n1,1\n2,1\n", {}) == "class empty: negative");
  CHECK(error_text("a,label\n1,-1\n2,-1\n", {}) == "class empty: positive");
}

TEST_CASE("malformed csv input") {
  CHECK(error_text("a,b\n1,2\n", {}).find("not found") != std::string::npos);
  CHECK(error_text("a,label,label\n1,1,1\n", {}).find("more than once") != std::string::npos);
  CHECK(error_text("a,label\n1,1\n2\n", {}).find("row 3") != std::string::npos);
  const std::string bad = error_text("a,label\n1,1\nx,-1\n", {});
  CHECK(bad.find("row 3") != std::string::npos);
  CHECK(bad.find("'a'") != std::string::npos);
  CHECK(error_text("a,label\nnan,1\n2,-1\n", {}).find("row 2") != std::string::npos);
  CHECK(error_text("", {}) == "missing header row");
}

TEST_CASE("quoted fields") {
  const auto f = split_csv_record("\"a,b\",\"say \"\"hi\"\"\",3");
  REQUIRE(f.size() == 3);
  CHECK(f[0] == "a,b");
  CHECK(f[1] == "say \"hi\"");
  CHECK(f[2] == "3");
}

TEST_CASE("parse_real") {
  double v = 0;
  CHECK(parse_real("  -1.5e3 ", v));
  CHECK(v == -1500.0);
  CHECK(parse_real("+2", v));
  CHECK(v == 2.0);
  CHECK_FALSE(parse_real("", v));
  CHECK_FALSE(parse_real("1x", v));
  CHECK_FALSE(parse_real("inf", v));
}

TEST_CASE("write then load round trips every value") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  Matrix x(3, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (double& v : x.row(i)) v = u(rng) / 7.0;
  x(0, 0) = 1e-300;
  x(1, 1) = -0.1;
  const Dataset d(x, {Label::positive, Label::negative, Label::positive, Label::negative,
                      Label::negative, Label::positive});
  std::stringstream buf;
  write_csv(buf, d, {});
  const Dataset back = read_csv(buf, {});
  REQUIRE(back.num_samples() == 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(back.features()(i, j) == d.features()(i, j));
  CHECK(back.labels() == d.labels());
}

TEST_CASE("feature table") {
  std::istringstream in("a,b,label\n1,2,1\n3,4,-1\n");
  const Table t = read_feature_table(in, "label");
  CHECK(t.header == std::vector<std::string>{"a", "b"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][1] == 4.0);
  std::istringstream empty("");
  CHECK(read_feature_table(empty).rows.empty());
}

TEST_CASE("dataset invariants") {
  CHECK_THROWS_AS(Dataset(Matrix(1, 2), {Label::positive}), DataError);
  CHECK_THROWS_AS(Dataset(Matrix(1, 2), {Label::positive, Label::positive}), DataError);
  Matrix bad(1, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(Dataset(bad, {Label::positive, Label::negative}), DataError);
  CHECK_THROWS_AS(Dataset::from_samples({{1.0}, {2.0}}, {1, 0}), DataError);
  CHECK_THROWS_AS(Dataset::from_samples({{1.0}, {2.0, 3.0}}, {1, -1}), DataError);
}

TEST_CASE("partition") {
  const Dataset a = Dataset::from_samples({{0}, {0}, {0}}, {1, -1, 1});
  CHECK(partition(a).positive == std::vector<std::size_t>{0, 2});
  CHECK(partition(a).negative == std::vector<std::size_t>{1});
  const Dataset b = Dataset::from_samples({{0}, {0}, {0}}, {-1, -1, 1});
  CHECK(partition(b).positive == std::vector<std::size_t>{2});
  CHECK(partition(b).negative == std::vector<std::size_t>{0, 1});
}

TEST_CASE("partition is a sorted disjoint cover") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Dataset d = testing::normal_dataset(rng, 2, 3 + trial % 17);
    const Partition p = partition(d);
    std::vector<int> seen(d.num_samples(), 0);
    for (std::size_t j : p.positive) seen[j]++;
    for (std::size_t j : p.negative) seen[j]++;
    CHECK(std::is_sorted(p.positive.begin(), p.positive.end()));
    CHECK(std::is_sorted(p.negative.begin(), p.negative.end()));
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("standardize examples") {
  const Dataset two = Dataset::from_samples({{2}, {4}}, {1, -1});
  const Standardized s0 = standardize(two, ScaleMode::sd, 0);
  CHECK(s0.scale[0] == 1.0);
  CHECK(s0.data.features()(0, 0) == 2.0);
  CHECK(s0.data.features()(0, 1) == 4.0);

  // sample sd of [0, 2, 4] is 2
  const Dataset three = Dataset::from_samples({{0}, {2}, {4}}, {1, -1, 1});
  const Standardized s1 = standardize(three, ScaleMode::sd);
  CHECK(s1.scale[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s1.data.features()(0, 2) == doctest::Approx(2.0).epsilon(1e-15));
  const Standardized sv = standardize(three, ScaleMode::variance);
  CHECK(sv.scale[0] == doctest::Approx(4.0).epsilon(1e-15));

  const Dataset flat = Dataset::from_samples({{5}, {5}, {5}}, {1, -1, 1});
  const Standardized s2 = standardize(flat, ScaleMode::sd);
  CHECK(s2.scale[0] == 1.0);
  CHECK(s2.constant_features == std::vector<std::size_t>{0});
  CHECK(s2.data.features()(0, 1) == 5.0);
}

TEST_CASE("standardize round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Dataset d = testing::normal_dataset(rng, 4, 9);
    for (ScaleMode mode : {ScaleMode::sd, ScaleMode::variance}) {
      const Standardized s = standardize(d, mode);
      const Dataset back = unapply_scale(s.data, s.scale);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
          const double a = d.features()(i, j);
          CHECK(std::abs(back.features()(i, j) - a) <= 1e-12 * std::abs(a));
        }
    }
  }
}

TEST_CASE("scale mode parsing") {
  CHECK(parse_scale_mode("variance") == ScaleMode::variance);
  CHECK(to_string(ScaleMode::sd) == "sd");
  CHECK_THROWS_AS(parse_scale_mode("mad"), UsageError);
  CHECK_THROWS_AS(FeatureScale({1.0, 0.0}), DataError);
}

}  // TEST_SUITE
