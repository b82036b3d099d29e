#include "sparsecenter/dataset.hpp"

#include <cmath>
#include <utility>

#include "sparsecenter/errors.hpp"

namespace sparsecenter {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DataError("matrix data size " + std::to_string(data_.size()) + " does not match " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Dataset::Dataset(Matrix features, std::vector<Label> labels,
                 std::optional<std::vector<std::string>> feature_names)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      feature_names_(std::move(feature_names)) {
  if (features_.cols() != labels_.size()) {
    throw DataError("feature matrix has " + std::to_string(features_.cols()) +
                    " samples but there are " + std::to_string(labels_.size()) + " labels");
  }
  if (feature_names_ && feature_names_->size() != features_.rows()) {
    throw DataError("expected " + std::to_string(features_.rows()) + " feature names, got " +
                    std::to_string(feature_names_->size()));
  }
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    switch (labels_[j]) {
      case Label::positive:
        positive_.push_back(j);
        break;
      case Label::negative:
        negative_.push_back(j);
        break;
      default:
        throw DataError("label of sample " + std::to_string(j) + " is not -1 or +1");
    }
  }
  if (positive_.empty()) throw DataError("class empty: positive");
  if (negative_.empty()) throw DataError("class empty: negative");
  for (std::size_t i = 0; i < features_.rows(); ++i) {
    const auto row = features_.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!std::isfinite(row[j])) {
        throw DataError("non-finite value at feature " + std::to_string(i) + ", sample " +
                        std::to_string(j));
      }
    }
  }
}

Dataset Dataset::from_samples(const std::vector<std::vector<double>>& samples,
                              const std::vector<int>& labels) {
  if (samples.size() != labels.size()) {
    throw DataError("sample and label counts differ");
  }
  const std::size_t m = samples.empty() ? 0 : samples.front().size();
  Matrix x(m, samples.size());
  std::vector<Label> y;
  y.reserve(labels.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (samples[j].size() != m) throw DataError("ragged sample " + std::to_string(j));
    for (std::size_t i = 0; i < m; ++i) x(i, j) = samples[j][i];
    if (labels[j] == 1) {
      y.push_back(Label::positive);
    } else if (labels[j] == -1) {
      y.push_back(Label::negative);
    } else {
      throw DataError("label of sample " + std::to_string(j) + " is not -1 or +1");
    }
  }
  return Dataset(std::move(x), std::move(y));
}

std::string Dataset::feature_name(std::size_t i) const {
  if (feature_names_) return (*feature_names_)[i];
  return "f" + std::to_string(i);
}

std::size_t LabeledSamples::count(Label label) const {
  std::size_t c = 0;
  for (Label l : labels) c += l == label ? 1 : 0;
  return c;
}

LabeledSamples Dataset::select_labeled(std::span<const std::size_t> columns) const {
  const std::size_t m = num_features();
  LabeledSamples out{Matrix(m, columns.size()), std::vector<Label>(columns.size())};
  for (std::size_t i = 0; i < m; ++i) {
    const auto src = features_.row(i);
    auto dst = out.features.row(i);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] >= num_samples()) throw DataError("sample index out of range");
      dst[c] = src[columns[c]];
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) out.labels[c] = labels_[columns[c]];
  return out;
}

Dataset Dataset::select_samples(std::span<const std::size_t> columns) const {
  LabeledSamples part = select_labeled(columns);
  return Dataset(std::move(part.features), std::move(part.labels), feature_names_);
}

Partition partition(const Dataset& d) {
  return {d.positive_indices(), d.negative_indices()};
}

FeatureScale::FeatureScale(std::vector<double> sigma) : sigma_(std::move(sigma)) {
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (!(sigma_[i] > 0.0) || !std::isfinite(sigma_[i])) {
      throw DataError("feature scale " + std::to_string(i) + " must be positive and finite");
    }
  }
}

ScaleMode parse_scale_mode(const std::string& text) {
  if (text == "none") return ScaleMode::none;
  if (text == "sd") return ScaleMode::sd;
  if (text == "variance") return ScaleMode::variance;
  throw UsageError("unknown scale mode '" + text + "' (expected none, sd or variance)");
}

std::string to_string(ScaleMode mode) {
  switch (mode) {
    case ScaleMode::none:
      return "none";
    case ScaleMode::sd:
      return "sd";
    case ScaleMode::variance:
      return "variance";
  }
  return "none";
}

namespace {

Dataset transform_rows(const Dataset& d, const FeatureScale& scale, bool inverse) {
  if (scale.size() != d.num_features()) {
    throw DataError("scale has " + std::to_string(scale.size()) + " entries, dataset has " +
                    std::to_string(d.num_features()) + " features");
  }
  Matrix x = d.features();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (double& v : x.row(i)) v = inverse ? v * scale[i] : v / scale[i];
  }
  return Dataset(std::move(x), d.labels(), d.feature_names());
}

}  // namespace

Standardized standardize(const Dataset& d, ScaleMode mode, int ddof) {
  const std::size_t m = d.num_features();
  const std::size_t n = d.num_samples();
  std::vector<double> sigma(m, 1.0);
  std::vector<std::size_t> constant;
  if (mode != ScaleMode::none) {
    if (ddof < 0 || static_cast<std::size_t>(ddof) >= n) {
      throw UsageError("ddof must lie in [0, n-1]");
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto row = d.feature_row(i);
      double mean = 0.0;
      for (double v : row) mean += v;
      mean /= static_cast<double>(n);
      double ss = 0.0;
      for (double v : row) ss += (v - mean) * (v - mean);
      const double variance = ss / static_cast<double>(n - static_cast<std::size_t>(ddof));
      const double s = mode == ScaleMode::sd ? std::sqrt(variance) : variance;
      if (s > 0.0 && std::isfinite(s)) {
        sigma[i] = s;
      } else {
        constant.push_back(i);
      }
    }
  }
  FeatureScale scale(std::move(sigma));
  Dataset scaled = transform_rows(d, scale, false);
  return {std::move(scaled), std::move(scale), std::move(constant)};
}

Dataset apply_scale(const Dataset& d, const FeatureScale& scale) {
  return transform_rows(d, scale, false);
}

LabeledSamples apply_scale(const LabeledSamples& samples, const FeatureScale& scale) {
  if (scale.size() != samples.features.rows()) {
    throw DataError("scale length differs from the feature count");
  }
  LabeledSamples out = samples;
  for (std::size_t i = 0; i < out.features.rows(); ++i) {
    for (double& v : out.features.row(i)) v /= scale[i];
  }
  return out;
}

Dataset unapply_scale(const Dataset& d, const FeatureScale& scale) {
  return transform_rows(d, scale, true);
}

}  // namespace sparsecenter
