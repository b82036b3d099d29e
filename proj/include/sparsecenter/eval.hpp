#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "sparsecenter/classify.hpp"
#include "sparsecenter/dataset.hpp"

namespace sparsecenter {

/// Portable randomness for splits: std::mt19937_64 (whose output sequence
/// the standard fixes) feeding our own rejection-sampled bounded integers
/// and Fisher-Yates shuffle, so a seed gives the same split everywhere.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class SplitMode { stratified, uniform };

struct TrainTestSplit {
  Dataset train;
  LabeledSamples test;
  /// Original sample indices of each part, ascending.
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
};

/// Number of training samples drawn from a group of `count` samples:
/// floor(fraction * count + 0.5).
std::size_t train_count(std::size_t count, double fraction);

/// Random train/test split. Stratified mode draws train_count(n_c) samples
/// from each class; uniform mode draws train_count(n) overall. Throws
/// DataError when the training part would miss a class or the test part
/// would be empty, UsageError for a fraction outside (0, 1).
TrainTestSplit split(const Dataset& d, double fraction, std::uint64_t seed,
                     SplitMode mode = SplitMode::stratified);
TrainTestSplit split(const Dataset& d, double fraction, SplitRng& rng,
                     SplitMode mode = SplitMode::stratified);

struct Scores {
  double accuracy = 0.0;
  /// Mean recall over the classes present in the test data.
  double balanced_accuracy = 0.0;
};

Scores score(const CenterModel& model, const LabeledSamples& test);

struct EvalRecord {
  std::size_t k = 0;
  double mean_accuracy = 0.0;
  double sd_accuracy = 0.0;
  double mean_balanced_accuracy = 0.0;
  double mean_train_time_s = 0.0;
};

struct EvalReport {
  std::vector<EvalRecord> per_k;
  std::size_t n_splits = 0;
  double split_fraction = 0.0;
  std::uint64_t seed = 0;
};

struct EvalOptions {
  SplitMode split_mode = SplitMode::stratified;
  /// Scale estimated on each training part and applied to both parts.
  ScaleMode scale_mode = ScaleMode::none;
  int ddof = 1;
};

/// Repeated random splits: for every split and every k, trains on the
/// training part and scores the test part. Means and sample standard
/// deviations are accumulated in split order.
EvalReport evaluate(const Dataset& d, ModelKind kind, std::span<const std::size_t> k_list,
                    std::size_t n_splits, double fraction, std::uint64_t seed,
                    const EvalOptions& options = {});

/// CSV with columns k,mean_acc,sd_acc,mean_bal_acc,mean_train_time_s.
/// With include_timing false the timing column is written as 0.
void write_report_csv(std::ostream& out, const EvalReport& report, bool include_timing = true);

}  // namespace sparsecenter
