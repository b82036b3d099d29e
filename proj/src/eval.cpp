#include "sparsecenter/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "sparsecenter/csv.hpp"
#include "sparsecenter/errors.hpp"
#include "sparsecenter/sparse_l1.hpp"
#include "sparsecenter/sparse_l2.hpp"

namespace sparsecenter {

std::uint64_t SplitRng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("SplitRng::below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::size_t train_count(std::size_t count, double fraction) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(count) + 0.5));
}

TrainTestSplit split(const Dataset& d, double fraction, std::uint64_t seed, SplitMode mode) {
  SplitRng rng(seed);
  return split(d, fraction, rng, mode);
}

TrainTestSplit split(const Dataset& d, double fraction, SplitRng& rng, SplitMode mode) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw UsageError("split fraction must lie in (0, 1)");

  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  const auto take = [&](std::vector<std::size_t> group) {
    const std::size_t n_train = std::min(train_count(group.size(), fraction), group.size());
    rng.shuffle(group);
    train_idx.insert(train_idx.end(), group.begin(), group.begin() + static_cast<std::ptrdiff_t>(n_train));
    test_idx.insert(test_idx.end(), group.begin() + static_cast<std::ptrdiff_t>(n_train), group.end());
    return n_train;
  };

  if (mode == SplitMode::stratified) {
    if (take(d.positive_indices()) == 0) {
      throw DataError("positive class too small to appear in the training split");
    }
    if (take(d.negative_indices()) == 0) {
      throw DataError("negative class too small to appear in the training split");
    }
  } else {
    std::vector<std::size_t> all(d.num_samples());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    take(std::move(all));
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  if (test_idx.empty()) throw DataError("test split is empty");
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t j : train_idx) {
    (d.labels()[j] == Label::positive ? has_pos : has_neg) = true;
  }
  if (!has_pos) throw DataError("positive class missing from the training split");
  if (!has_neg) throw DataError("negative class missing from the training split");

  Dataset train = d.select_samples(train_idx);
  LabeledSamples test = d.select_labeled(test_idx);
  return {std::move(train), std::move(test), std::move(train_idx), std::move(test_idx)};
}

Scores score(const CenterModel& model, const LabeledSamples& test) {
  const std::size_t n = test.labels.size();
  const std::size_t m = test.features.rows();
  if (n == 0) throw DataError("cannot score an empty test set");
  std::size_t correct = 0;
  std::size_t hit_pos = 0;
  std::size_t hit_neg = 0;
  std::vector<double> x(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) x[i] = test.features(i, j);
    const Label truth = test.labels[j];
    if (predict(model, x).label == truth) {
      ++correct;
      (truth == Label::positive ? hit_pos : hit_neg) += 1;
    }
  }
  Scores s;
  s.accuracy = static_cast<double>(correct) / static_cast<double>(n);
  const std::size_t n_pos = test.count(Label::positive);
  const std::size_t n_neg = n - n_pos;
  double recall_sum = 0.0;
  int classes = 0;
  if (n_pos > 0) {
    recall_sum += static_cast<double>(hit_pos) / static_cast<double>(n_pos);
    ++classes;
  }
  if (n_neg > 0) {
    recall_sum += static_cast<double>(hit_neg) / static_cast<double>(n_neg);
    ++classes;
  }
  s.balanced_accuracy = recall_sum / classes;
  return s;
}

EvalReport evaluate(const Dataset& d, ModelKind kind, std::span<const std::size_t> k_list,
                    std::size_t n_splits, double fraction, std::uint64_t seed,
                    const EvalOptions& options) {
  if (n_splits == 0) throw UsageError("need at least one split");
  for (std::size_t k : k_list) {
    if (k > d.num_features()) {
      throw UsageError("k = " + std::to_string(k) + " exceeds " + std::to_string(d.num_features()));
    }
  }

  const std::size_t nk = k_list.size();
  std::vector<std::vector<double>> acc(nk);
  std::vector<std::vector<double>> bal(nk);
  std::vector<double> seconds(nk, 0.0);

  SplitRng rng(seed);
  for (std::size_t s = 0; s < n_splits; ++s) {
    TrainTestSplit parts = split(d, fraction, rng, options.split_mode);
    Dataset train = std::move(parts.train);
    LabeledSamples test = std::move(parts.test);
    if (options.scale_mode != ScaleMode::none) {
      Standardized st = standardize(train, options.scale_mode, options.ddof);
      train = std::move(st.data);
      test = apply_scale(test, st.scale);
    }
    for (std::size_t q = 0; q < nk; ++q) {
      const auto start = std::chrono::steady_clock::now();
      const CenterModel model = kind == ModelKind::l2 ? train_l2(train, k_list[q]) : train_l1(train, k_list[q]);
      seconds[q] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const Scores sc = score(model, test);
      acc[q].push_back(sc.accuracy);
      bal[q].push_back(sc.balanced_accuracy);
    }
  }

  EvalReport report;
  report.n_splits = n_splits;
  report.split_fraction = fraction;
  report.seed = seed;
  const double count = static_cast<double>(n_splits);
  for (std::size_t q = 0; q < nk; ++q) {
    EvalRecord rec;
    rec.k = k_list[q];
    double sum = 0.0;
    for (double a : acc[q]) sum += a;
    rec.mean_accuracy = sum / count;
    double ss = 0.0;
    for (double a : acc[q]) ss += (a - rec.mean_accuracy) * (a - rec.mean_accuracy);
    rec.sd_accuracy = n_splits > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
    double bsum = 0.0;
    for (double b : bal[q]) bsum += b;
    rec.mean_balanced_accuracy = bsum / count;
    rec.mean_train_time_s = seconds[q] / count;
    report.per_k.push_back(rec);
  }
  return report;
}

void write_report_csv(std::ostream& out, const EvalReport& report, bool include_timing) {
  out << "k,mean_acc,sd_acc,mean_bal_acc,mean_train_time_s\n";
  for (const auto& rec : report.per_k) {
    out << rec.k << ',' << format_real(rec.mean_accuracy) << ',' << format_real(rec.sd_accuracy) << ','
        << format_real(rec.mean_balanced_accuracy) << ','
        << format_real(include_timing ? rec.mean_train_time_s : 0.0) << '\n';
  }
}

}  // namespace sparsecenter
