#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsecenter/classify.hpp"
#include "sparsecenter/dataset.hpp"
#include "sparsecenter/robust_stats.hpp"
#include "sparsecenter/sparsity_path.hpp"

namespace sparsecenter {

struct L1TrainArtifacts {
  std::vector<double> median_pos;
  std::vector<double> median_neg;
  std::vector<double> pooled_median;
  DispersionTriple dispersions;
  /// All features by e nondecreasing (most negative first), ties by index.
  std::vector<std::size_t> ranking;
};

L1TrainArtifacts l1_artifacts(const Dataset& d);

CenterModel l1_model_from_artifacts(const L1TrainArtifacts& artifacts, std::size_t k);

/// Globally optimal sparse l1 centers with ||theta_pos - theta_neg||_0 <= k:
/// class medians on the k features with the most negative e, pooled
/// weighted median elsewhere. Throws UsageError unless 0 <= k <= m.
CenterModel train_l1(const Dataset& d, std::size_t k);

/// (1/n+) sum_{J+} ||x - theta_pos||_1 + (1/n-) sum_{J-} ||x - theta_neg||_1.
double objective_l1(const Dataset& d, std::span<const double> theta_pos,
                    std::span<const double> theta_neg);

/// Objective of the optimum for a selected set, from the dispersions alone:
/// sum over selected of (d_pos + d_neg) plus sum over the rest of d_all.
double decomposed_objective_l1(const DispersionTriple& dispersions,
                               std::span<const std::size_t> selected);

SparsityPath sparsity_path_l1(const Dataset& d);

}  // namespace sparsecenter
