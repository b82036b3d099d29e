#include "sparsecenter/classify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sparsecenter/errors.hpp"

namespace sparsecenter {

ModelKind parse_model_kind(const std::string& text) {
  if (text == "l1") return ModelKind::l1;
  if (text == "l2") return ModelKind::l2;
  throw UsageError("unknown model kind '" + text + "' (expected l1 or l2)");
}

std::string to_string(ModelKind kind) { return kind == ModelKind::l1 ? "l1" : "l2"; }

CenterModel::CenterModel(ModelKind kind, std::size_t k, std::vector<std::size_t> selected,
                         std::vector<double> theta_pos, std::vector<double> theta_neg,
                         std::optional<FeatureScale> scale,
                         std::optional<std::vector<std::string>> feature_names)
    : kind_(kind),
      k_(k),
      selected_(std::move(selected)),
      theta_pos_(std::move(theta_pos)),
      theta_neg_(std::move(theta_neg)),
      scale_(std::move(scale)),
      feature_names_(std::move(feature_names)) {
  const std::size_t m = theta_pos_.size();
  if (theta_neg_.size() != m) throw DataError("center vectors differ in length");
  if (k_ > m) throw DataError("k exceeds the number of features");
  if (selected_.size() > k_) throw DataError("more selected features than k");
  if (!std::is_sorted(selected_.begin(), selected_.end()) ||
      std::adjacent_find(selected_.begin(), selected_.end()) != selected_.end()) {
    throw DataError("selected features must be strictly increasing");
  }
  if (!selected_.empty() && selected_.back() >= m) throw DataError("selected feature out of range");
  if (scale_ && scale_->size() != m) throw DataError("scale length differs from model dimension");
  if (feature_names_ && feature_names_->size() != m) {
    throw DataError("feature name count differs from model dimension");
  }

  std::size_t next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(theta_pos_[i]) || !std::isfinite(theta_neg_[i])) {
      throw DataError("non-finite center coordinate " + std::to_string(i));
    }
    const bool is_selected = next < selected_.size() && selected_[next] == i;
    if (is_selected) {
      ++next;
    } else if (theta_pos_[i] != theta_neg_[i]) {
      throw DataError("centers differ at unselected feature " + std::to_string(i));
    }
  }

  for (std::size_t i : selected_) {
    l2_offset_ += theta_neg_[i] * theta_neg_[i] - theta_pos_[i] * theta_pos_[i];
  }
}

CenterModel CenterModel::with_metadata(std::optional<FeatureScale> scale,
                                       std::optional<std::vector<std::string>> feature_names) const {
  return CenterModel(kind_, k_, selected_, theta_pos_, theta_neg_, std::move(scale),
                     std::move(feature_names));
}

CenterModel CenterModel::swapped() const {
  return CenterModel(kind_, k_, selected_, theta_neg_, theta_pos_, scale_, feature_names_);
}

namespace {

void check_dimension(const CenterModel& model, std::span<const double> x) {
  if (x.size() != model.dimension()) {
    throw DataError("input has " + std::to_string(x.size()) + " features, model expects " +
                    std::to_string(model.dimension()));
  }
}

double scaled(const CenterModel& model, std::span<const double> x, std::size_t i) {
  return model.scale() ? x[i] / (*model.scale())[i] : x[i];
}

}  // namespace

double discriminant(const CenterModel& model, std::span<const double> x) {
  check_dimension(model, x);
  const auto& tp = model.theta_pos();
  const auto& tn = model.theta_neg();
  if (model.kind() == ModelKind::l2) {
    double linear = 0.0;
    for (std::size_t i : model.selected()) linear += scaled(model, x, i) * (tp[i] - tn[i]);
    return model.l2_offset() + 2.0 * linear;
  }
  double delta = 0.0;
  for (std::size_t i : model.selected()) {
    const double xi = scaled(model, x, i);
    delta += std::abs(xi - tn[i]) - std::abs(xi - tp[i]);
  }
  return delta;
}

double discriminant_by_distances(const CenterModel& model, std::span<const double> x) {
  check_dimension(model, x);
  const auto& tp = model.theta_pos();
  const auto& tn = model.theta_neg();
  double to_neg = 0.0;
  double to_pos = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = scaled(model, x, i);
    if (model.kind() == ModelKind::l2) {
      to_neg += (xi - tn[i]) * (xi - tn[i]);
      to_pos += (xi - tp[i]) * (xi - tp[i]);
    } else {
      to_neg += std::abs(xi - tn[i]);
      to_pos += std::abs(xi - tp[i]);
    }
  }
  return to_neg - to_pos;
}

Prediction predict(const CenterModel& model, std::span<const double> x) {
  const double delta = discriminant(model, x);
  if (delta > 0.0) return {Label::positive, delta, Outcome::positive};
  if (delta < 0.0) return {Label::negative, delta, Outcome::negative};
  return {Label::positive, delta, Outcome::tie};
}

}  // namespace sparsecenter
