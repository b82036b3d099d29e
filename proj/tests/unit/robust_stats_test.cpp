#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sparsecenter/robust_stats.hpp"
#include "support/generators.hpp"

using namespace sparsecenter;
using testing::candidate_scan_minimum;
using testing::weighted_abs_loss;

namespace {

double wm(std::vector<double> z, std::vector<double> w) { return weighted_median(z, w).theta; }

struct RandomInstance {
  std::vector<double> z;
  std::vector<double> w;
};

RandomInstance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  std::normal_distribution<double> g(0.0, 2.0);
  RandomInstance r;
  const int p = size(rng);
  for (int i = 0; i < p; ++i) {
    r.z.push_back(coin(rng) == 0 ? g(rng) : small(rng));
    const int wk = coin(rng);
    r.w.push_back(wk == 0 ? 0.0 : wk == 1 ? 1.0 : std::uniform_real_distribution<double>(0.1, 3)(rng));
  }
  if (std::accumulate(r.w.begin(), r.w.end(), 0.0) == 0.0) r.w[0] = 1.0;
  return r;
}

}  // namespace

TEST_SUITE("robust_stats") {

TEST_CASE("weighted median examples") {
  auto a = weighted_median(std::vector<double>{3, 1, 2}, std::vector<double>{1, 1, 1});
  CHECK(a.theta == 2.0);
  CHECK(a.dispersion == 2.0);
  auto b = weighted_median(std::vector<double>{0, 10}, std::vector<double>{1, 1});
  CHECK(b.theta == 5.0);
  CHECK(b.dispersion == 10.0);
  auto c = weighted_median(std::vector<double>{0, 10}, std::vector<double>{3, 1});
  CHECK(c.theta == 0.0);
  CHECK(c.dispersion == 10.0);
  auto d = weighted_median(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 1, 1, 10});
  CHECK(d.theta == 4.0);
  CHECK(d.dispersion == 6.0);
  CHECK(wm({3, 3, 7, 7}, {1, 1, 1, 1}) == 5.0);
}

TEST_CASE("zero weights and pooled repeats") {
  // zero-weight 100 is not part of the support, so the midpoint partner is 4
  CHECK(wm({1, 4, 100}, {1, 1, 0}) == 2.5);
  CHECK(wm({2, 2, 9}, {1, 1, 1}) == 2.0);
  CHECK(wm({5}, {0.25}) == 5.0);
}

TEST_CASE("weighted median rejects bad input") {
  CHECK_THROWS_AS(wm({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(wm({1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(wm({1, 2}, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(wm({1, 2}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(wm({1, NAN}, {1, 1}), std::invalid_argument);
}

TEST_CASE("weighted median is a minimizer and a discrete median") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const RandomInstance r = random_instance(rng);
    const WeightedMedian got = weighted_median(r.z, r.w);
    const double best = candidate_scan_minimum(r.z, r.w);
    CHECK(weighted_abs_loss(r.z, r.w, got.theta) <= best + 1e-12);
    CHECK(std::abs(got.dispersion - best) <= 1e-12 * std::max(1.0, best));
    const double total = std::accumulate(r.w.begin(), r.w.end(), 0.0);
    double below = 0.0;
    double above = 0.0;
    for (std::size_t i = 0; i < r.z.size(); ++i) {
      if (r.z[i] <= got.theta) below += r.w[i];
      if (r.z[i] >= got.theta) above += r.w[i];
    }
    CHECK(below / total >= 0.5 - 1e-12);
    CHECK(above / total >= 0.5 - 1e-12);
  }
}

TEST_CASE("uniform weights give the textbook median") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> z(size(rng));
    for (double& v : z) v = small(rng);
    const std::vector<double> w(z.size(), 0.7);
    CHECK(wm(z, w) == testing::textbook_median(z));
    std::vector<double> sorted = z;
    std::sort(sorted.begin(), sorted.end());
    CHECK(median_sorted(sorted).theta == testing::textbook_median(z));
  }
}

TEST_CASE("translation equivariance and weight rescaling") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const RandomInstance r = random_instance(rng);
    const WeightedMedian base = weighted_median(r.z, r.w);
    std::vector<double> shifted = r.z;
    for (double& v : shifted) v += 8.0;
    const WeightedMedian moved = weighted_median(shifted, r.w);
    CHECK(moved.theta == doctest::Approx(base.theta + 8.0).epsilon(1e-12));
    CHECK(moved.dispersion == doctest::Approx(base.dispersion).epsilon(1e-12));
    std::vector<double> scaled = r.w;
    for (double& v : scaled) v *= 0.125;
    CHECK(weighted_median(r.z, scaled).theta == base.theta);
  }
}

TEST_CASE("class centers") {
  const Dataset d = Dataset::from_samples({{1, 0}, {3, 0}, {0, 2}, {0, 4}}, {1, 1, -1, -1});
  const ClassCenters c = class_centroids(d);
  CHECK(c.center_pos == std::vector<double>{2, 0});
  CHECK(c.center_neg == std::vector<double>{0, 3});

  const Dataset one = Dataset::from_samples({{1, 5}, {-2, 7}}, {-1, 1});
  CHECK(class_centroids(one).center_pos == std::vector<double>{-2, 7});
  CHECK(class_medians(one).center_neg == std::vector<double>{1, 5});

  const Dataset same = Dataset::from_samples({{4, 4}, {4, 4}, {4, 4}}, {1, -1, 1});
  CHECK(class_centroids(same).center_pos == class_centroids(same).center_neg);

  const Dataset meds = Dataset::from_samples({{1}, {2}, {9}, {0}, {10}}, {1, 1, 1, -1, -1});
  const ClassCenters mc = class_medians(meds);
  CHECK(mc.center_pos[0] == 2.0);
  CHECK(mc.center_neg[0] == 5.0);
  CHECK(mc.kind == CenterKind::median);

  const Dataset four = Dataset::from_samples({{3}, {3}, {7}, {7}, {0}}, {1, 1, 1, 1, -1});
  CHECK(class_medians(four).center_pos[0] == 5.0);
}

TEST_CASE("dispersion triple examples") {
  const Dataset flat = Dataset::from_samples({{2}, {2}, {2}}, {1, -1, -1});
  const DispersionTriple t = dispersion_triple(flat);
  CHECK(t.d_pos[0] == 0.0);
  CHECK(t.d_neg[0] == 0.0);
  CHECK(t.d_all[0] == 0.0);
  CHECK(t.e[0] == 0.0);

  const Dataset split = Dataset::from_samples({{0}, {0}, {10}, {10}}, {1, 1, -1, -1});
  const MedianSummary s = median_summary(split);
  CHECK(s.pooled_median[0] == 5.0);
  CHECK(s.dispersions.d_pos[0] == 0.0);
  CHECK(s.dispersions.d_neg[0] == 0.0);
  CHECK(s.dispersions.d_all[0] == 10.0);
  CHECK(s.dispersions.e[0] == -10.0);
}

TEST_CASE("pooled median agrees with the generic weighted median") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Dataset d = trial % 2 ? testing::duplicate_dataset(rng, 3, 4 + trial % 9)
                                : testing::normal_dataset(rng, 3, 4 + trial % 9);
    const MedianSummary s = median_summary(d);
    const double wp = 1.0 / static_cast<double>(d.num_positive());
    const double wn = 1.0 / static_cast<double>(d.num_negative());
    std::vector<double> w;
    for (Label y : d.labels()) w.push_back(y == Label::positive ? wp : wn);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::vector<double> z(d.feature_row(i).begin(), d.feature_row(i).end());
      const WeightedMedian ref = weighted_median(z, w);
      CHECK(s.pooled_median[i] == ref.theta);
      CHECK(s.dispersions.d_all[i] == doctest::Approx(ref.dispersion).epsilon(1e-12));
      CHECK(s.dispersions.e[i] <= 1e-9);
    }
  }
}

TEST_CASE("duplicating a class leaves the pooled median unchanged") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Dataset d = testing::duplicate_dataset(rng, 3, 6);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < d.num_samples(); ++j) {
      cols.push_back(j);
      if (d.labels()[j] == Label::negative) cols.push_back(j);
    }
    const MedianSummary a = median_summary(d);
    const MedianSummary b = median_summary(d.select_samples(cols));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(a.pooled_median[i] == b.pooled_median[i]);
      CHECK(a.dispersions.d_all[i] == doctest::Approx(b.dispersions.d_all[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("class medians resist a single outlier") {
  const Dataset d = Dataset::from_samples({{1, 4}, {2, 5}, {3, 6}, {0, 0}, {0, 1}}, {1, 1, 1, -1, -1});
  const Dataset wild = Dataset::from_samples({{1, 4}, {2, 5}, {1e12, 6}, {0, 0}, {0, 1}}, {1, 1, 1, -1, -1});
  const ClassCenters a = class_medians(d);
  const ClassCenters b = class_medians(wild);
  CHECK(b.center_pos[1] == a.center_pos[1]);
  CHECK(b.center_neg == a.center_neg);
  CHECK(b.center_pos[0] >= 1.0);
  CHECK(b.center_pos[0] <= 2.0);
}

TEST_CASE("recursive centroid update") {
  CHECK(recursive_centroid_update(std::vector<double>{0, 0}, 0, std::vector<double>{7, 7}) ==
        std::vector<double>{7, 7});
  CHECK(recursive_centroid_update(std::vector<double>{2, 0}, 2, std::vector<double>{5, 3}) ==
        std::vector<double>{3, 1});

  std::mt19937_64 rng(41);
  std::normal_distribution<double> g(1.0, 3.0);
  std::vector<std::vector<double>> samples(100, std::vector<double>(3));
  std::vector<double> batch(3, 0.0);
  for (auto& s : samples)
    for (std::size_t i = 0; i < 3; ++i) {
      s[i] = g(rng);
      batch[i] += s[i] / 100.0;
    }
  for (int order = 0; order < 5; ++order) {
    std::shuffle(samples.begin(), samples.end(), rng);
    std::vector<double> c(3, 0.0);
    for (std::size_t t = 0; t < samples.size(); ++t) c = recursive_centroid_update(c, t, samples[t]);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(c[i] - batch[i]) <= 1e-10);
  }
}

}  // TEST_SUITE
