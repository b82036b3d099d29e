#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sparsecenter {

enum class Label : std::int8_t { negative = -1, positive = 1 };

inline int to_int(Label label) { return static_cast<int>(label); }

/// Dense row-major matrix. Rows are features, columns are samples.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const;

  std::span<const double> values() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Labelled samples without the class-presence requirement of Dataset; used
/// for held-out test parts that may hold a single class.
struct LabeledSamples {
  Matrix features;  // features x samples
  std::vector<Label> labels;

  std::size_t count(Label label) const;
};

/// Labelled training data, features x samples.
///
/// Construction validates every invariant the trainers rely on: labels agree
/// with the column count, both classes are present and every value is
/// finite. Once built the object is immutable.
class Dataset {
 public:
  Dataset(Matrix features, std::vector<Label> labels,
          std::optional<std::vector<std::string>> feature_names = std::nullopt);

  /// Convenience for tests and generators: samples given as rows.
  static Dataset from_samples(const std::vector<std::vector<double>>& samples,
                              const std::vector<int>& labels);

  std::size_t num_features() const { return features_.rows(); }
  std::size_t num_samples() const { return features_.cols(); }

  const Matrix& features() const { return features_; }
  std::span<const double> feature_row(std::size_t i) const { return features_.row(i); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::optional<std::vector<std::string>>& feature_names() const { return feature_names_; }

  /// Ascending sample indices of each class.
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  const std::vector<std::size_t>& negative_indices() const { return negative_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_negative() const { return negative_.size(); }

  /// Name of feature i, falling back to "f<i>" when the dataset is unnamed.
  std::string feature_name(std::size_t i) const;

  /// New dataset holding the given sample columns, in the given order.
  Dataset select_samples(std::span<const std::size_t> columns) const;

  /// Same selection without the Dataset invariants.
  LabeledSamples select_labeled(std::span<const std::size_t> columns) const;

 private:
  Matrix features_;
  std::vector<Label> labels_;
  std::optional<std::vector<std::string>> feature_names_;
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> negative_;
};

struct Partition {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};

Partition partition(const Dataset& d);

/// Per-feature divisors. Every entry is strictly positive and finite.
class FeatureScale {
 public:
  explicit FeatureScale(std::vector<double> sigma);

  std::size_t size() const { return sigma_.size(); }
  const std::vector<double>& sigma() const { return sigma_; }
  double operator[](std::size_t i) const { return sigma_[i]; }

 private:
  std::vector<double> sigma_;
};

enum class ScaleMode { none, sd, variance };

ScaleMode parse_scale_mode(const std::string& text);
std::string to_string(ScaleMode mode);

struct Standardized {
  Dataset data;
  FeatureScale scale;
  /// Features whose spread was zero; their scale was forced to 1.
  std::vector<std::size_t> constant_features;
};

/// Divides every feature row by its sample standard deviation (mode sd) or
/// sample variance (mode variance), using `ddof` degrees of freedom. Mode
/// none yields unit scales.
Standardized standardize(const Dataset& d, ScaleMode mode, int ddof = 1);

/// Applies an existing scale to a dataset (row i divided by scale[i]).
Dataset apply_scale(const Dataset& d, const FeatureScale& scale);

LabeledSamples apply_scale(const LabeledSamples& samples, const FeatureScale& scale);

/// Inverse of apply_scale.
Dataset unapply_scale(const Dataset& d, const FeatureScale& scale);

}  // namespace sparsecenter
