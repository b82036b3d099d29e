#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsecenter/dataset.hpp"

namespace sparsecenter {

enum class ModelKind { l1, l2 };

ModelKind parse_model_kind(const std::string& text);
std::string to_string(ModelKind kind);

/// A trained sparse center classifier.
///
/// theta_pos and theta_neg agree exactly outside `selected`, so only the
/// selected features influence a prediction. When a scale is attached the
/// centers live in the scaled space and raw inputs are divided by it before
/// evaluation.
class CenterModel {
 public:
  CenterModel(ModelKind kind, std::size_t k, std::vector<std::size_t> selected,
              std::vector<double> theta_pos, std::vector<double> theta_neg,
              std::optional<FeatureScale> scale = std::nullopt,
              std::optional<std::vector<std::string>> feature_names = std::nullopt);

  ModelKind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  std::size_t dimension() const { return theta_pos_.size(); }
  const std::vector<std::size_t>& selected() const { return selected_; }
  const std::vector<double>& theta_pos() const { return theta_pos_; }
  const std::vector<double>& theta_neg() const { return theta_neg_; }
  const std::optional<FeatureScale>& scale() const { return scale_; }
  const std::optional<std::vector<std::string>>& feature_names() const { return feature_names_; }

  /// ||theta_neg||^2 - ||theta_pos||^2, summed over the selected features
  /// (the other terms cancel).
  double l2_offset() const { return l2_offset_; }

  /// Copy with the scale and names replaced.
  CenterModel with_metadata(std::optional<FeatureScale> scale,
                            std::optional<std::vector<std::string>> feature_names) const;

  /// Copy with the two centers exchanged.
  CenterModel swapped() const;

 private:
  ModelKind kind_;
  std::size_t k_;
  std::vector<std::size_t> selected_;
  std::vector<double> theta_pos_;
  std::vector<double> theta_neg_;
  std::optional<FeatureScale> scale_;
  std::optional<std::vector<std::string>> feature_names_;
  double l2_offset_ = 0.0;
};

/// Delta(x) = dist(x, theta_neg) - dist(x, theta_pos), squared Euclidean for
/// l2 (evaluated in its linear form) and l1 for l1. Positive means x is
/// closer to the positive center. Throws DataError on a dimension mismatch.
double discriminant(const CenterModel& model, std::span<const double> x);

/// Delta computed directly as the difference of the two distances, over all
/// coordinates. Reference route for tests.
double discriminant_by_distances(const CenterModel& model, std::span<const double> x);

enum class Outcome { positive, negative, tie };

struct Prediction {
  Label label;
  double delta;
  Outcome outcome;
};

/// Sign of the discriminant. A tie (delta == 0) resolves to the positive
/// class; `outcome` still reports it as a tie for callers that count ties.
Prediction predict(const CenterModel& model, std::span<const double> x);

}  // namespace sparsecenter
