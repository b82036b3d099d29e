#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsecenter/classify.hpp"
#include "sparsecenter/dataset.hpp"
#include "sparsecenter/ranking.hpp"
#include "sparsecenter/sparsity_path.hpp"

namespace sparsecenter {

/// Intermediate quantities of exact sparse l2 training.
struct L2TrainArtifacts {
  std::vector<double> centroid_pos;
  std::vector<double> centroid_neg;
  std::vector<double> midpoint;  // (centroid_pos + centroid_neg) / 2
  std::vector<double> delta;     // centroid_pos - centroid_neg
  /// All features by |delta| nonincreasing, ties by ascending index.
  std::vector<std::size_t> ranking;
};

L2TrainArtifacts l2_artifacts(const Dataset& d);

/// Builds the optimal model for k from the two class centroids: the k
/// features with the largest |centroid difference| keep their class
/// centroids, every other feature is set to the centroid midpoint on both
/// sides. O(m log k).
CenterModel l2_model_from_centroids(std::span<const double> centroid_pos,
                                    std::span<const double> centroid_neg, std::size_t k);

/// Model for k reusing a precomputed full ranking. O(m).
CenterModel l2_model_from_artifacts(const L2TrainArtifacts& artifacts, std::size_t k);

/// Globally optimal sparse l2 centers with ||theta_pos - theta_neg||_0 <= k.
/// Throws UsageError unless 0 <= k <= m.
CenterModel train_l2(const Dataset& d, std::size_t k);

/// (1/n+) sum_{J+} ||x - theta_pos||^2 + (1/n-) sum_{J-} ||x - theta_neg||^2.
double objective_l2(const Dataset& d, std::span<const double> theta_pos,
                    std::span<const double> theta_neg);

/// The data-dependent constant of the closed-form optimum: the per-class
/// mean squared norms minus half the squared norm of the centroid sum.
double l2_closed_form_constant(const Dataset& d);

/// Optimal objective when exactly the features in `selected` may differ:
/// l2_closed_form_constant(d) - 0.5 * ||delta restricted to selected||^2.
double closed_form_optimum_l2(const Dataset& d, std::span<const std::size_t> selected);

/// Objectives for every k along the single |delta| ranking. Uses the
/// within-class sums of squares plus the neutralised squared differences,
/// which avoids the cancellation of the closed-form constant.
SparsityPath sparsity_path_l2(const Dataset& d);

/// Streaming trainer holding only the two running centroids and counts.
/// observe() is O(m); snapshot() ranks the features, O(m log k).
///
/// Not synchronised: concurrent observe() calls need external locking.
class OnlineL2Trainer {
 public:
  explicit OnlineL2Trainer(std::size_t dimension);

  void observe(std::span<const double> sample, Label label);

  /// Throws DataError while either class is still empty and UsageError for
  /// k > dimension.
  CenterModel snapshot(std::size_t k) const;

  std::size_t dimension() const { return centroid_pos_.size(); }
  std::size_t count_positive() const { return count_pos_; }
  std::size_t count_negative() const { return count_neg_; }
  const std::vector<double>& centroid_pos() const { return centroid_pos_; }
  const std::vector<double>& centroid_neg() const { return centroid_neg_; }

 private:
  std::vector<double> centroid_pos_;
  std::vector<double> centroid_neg_;
  std::size_t count_pos_ = 0;
  std::size_t count_neg_ = 0;
};

}  // namespace sparsecenter
