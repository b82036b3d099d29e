#include "sparsecenter/sparse_l2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsecenter/errors.hpp"
#include "sparsecenter/robust_stats.hpp"

namespace sparsecenter {

namespace {

void check_k(std::size_t k, std::size_t m) {
  if (k > m) {
    throw UsageError("k = " + std::to_string(k) + " is out of range [0, " + std::to_string(m) + "]");
  }
}

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Class centroids on `chosen` (sorted), the midpoint elsewhere.
CenterModel assemble(std::span<const double> centroid_pos, std::span<const double> centroid_neg,
                     std::size_t k, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  const std::size_t m = centroid_pos.size();
  std::vector<double> theta_pos(m);
  std::vector<double> theta_neg(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double mid = (centroid_pos[i] + centroid_neg[i]) / 2;
    theta_pos[i] = mid;
    theta_neg[i] = mid;
  }
  for (std::size_t i : chosen) {
    theta_pos[i] = centroid_pos[i];
    theta_neg[i] = centroid_neg[i];
  }
  return CenterModel(ModelKind::l2, k, std::move(chosen), std::move(theta_pos),
                     std::move(theta_neg));
}

}  // namespace

L2TrainArtifacts l2_artifacts(const Dataset& d) {
  ClassCenters centers = class_centroids(d);
  const std::size_t m = d.num_features();
  L2TrainArtifacts out;
  out.midpoint.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.midpoint[i] = (centers.center_pos[i] + centers.center_neg[i]) / 2;
  }
  out.delta = difference(centers.center_pos, centers.center_neg);
  out.ranking = rank_all(out.delta, RankOrder::largest_magnitude_first).order;
  out.centroid_pos = std::move(centers.center_pos);
  out.centroid_neg = std::move(centers.center_neg);
  return out;
}

CenterModel l2_model_from_centroids(std::span<const double> centroid_pos,
                                    std::span<const double> centroid_neg, std::size_t k) {
  if (centroid_pos.size() != centroid_neg.size()) throw DataError("centroid lengths differ");
  check_k(k, centroid_pos.size());
  const std::vector<double> delta = difference(centroid_pos, centroid_neg);
  return assemble(centroid_pos, centroid_neg, k,
                  top_k(delta, RankOrder::largest_magnitude_first, k));
}

CenterModel l2_model_from_artifacts(const L2TrainArtifacts& artifacts, std::size_t k) {
  check_k(k, artifacts.ranking.size());
  std::vector<std::size_t> chosen(artifacts.ranking.begin(),
                                  artifacts.ranking.begin() + static_cast<std::ptrdiff_t>(k));
  return assemble(artifacts.centroid_pos, artifacts.centroid_neg, k, std::move(chosen));
}

CenterModel train_l2(const Dataset& d, std::size_t k) {
  check_k(k, d.num_features());
  const ClassCenters centers = class_centroids(d);
  return l2_model_from_centroids(centers.center_pos, centers.center_neg, k);
}

double objective_l2(const Dataset& d, std::span<const double> theta_pos,
                    std::span<const double> theta_neg) {
  const std::size_t m = d.num_features();
  if (theta_pos.size() != m || theta_neg.size() != m) {
    throw DataError("center dimension differs from the dataset");
  }
  const auto& pos = d.positive_indices();
  const auto& neg = d.negative_indices();
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = d.feature_row(i);
    for (std::size_t j : pos) {
      const double r = row[j] - theta_pos[i];
      sum_pos += r * r;
    }
    for (std::size_t j : neg) {
      const double r = row[j] - theta_neg[i];
      sum_neg += r * r;
    }
  }
  return sum_pos / static_cast<double>(pos.size()) + sum_neg / static_cast<double>(neg.size());
}

double l2_closed_form_constant(const Dataset& d) {
  const ClassCenters centers = class_centroids(d);
  const auto& pos = d.positive_indices();
  const auto& neg = d.negative_indices();
  double sq_pos = 0.0;
  double sq_neg = 0.0;
  double sum_norm = 0.0;
  for (std::size_t i = 0; i < d.num_features(); ++i) {
    const auto row = d.feature_row(i);
    for (std::size_t j : pos) sq_pos += row[j] * row[j];
    for (std::size_t j : neg) sq_neg += row[j] * row[j];
    const double s = centers.center_pos[i] + centers.center_neg[i];
    sum_norm += s * s;
  }
  return sq_pos / static_cast<double>(pos.size()) + sq_neg / static_cast<double>(neg.size()) -
         0.5 * sum_norm;
}

double closed_form_optimum_l2(const Dataset& d, std::span<const std::size_t> selected) {
  const ClassCenters centers = class_centroids(d);
  double gain = 0.0;
  for (std::size_t i : selected) {
    if (i >= d.num_features()) throw UsageError("selected feature out of range");
    const double delta = centers.center_pos[i] - centers.center_neg[i];
    gain += delta * delta;
  }
  return l2_closed_form_constant(d) - 0.5 * gain;
}

SparsityPath sparsity_path_l2(const Dataset& d) {
  const std::size_t m = d.num_features();
  const auto& pos = d.positive_indices();
  const auto& neg = d.negative_indices();
  const double n_pos = static_cast<double>(pos.size());
  const double n_neg = static_cast<double>(neg.size());

  // Centroids and within-class scatter in one sweep; each row is still hot
  // in cache for the second loop.
  std::vector<double> delta(m);
  std::vector<double> within(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = d.feature_row(i);
    double sum_pos = 0.0;
    for (std::size_t j : pos) sum_pos += row[j];
    double sum_neg = 0.0;
    for (std::size_t j : neg) sum_neg += row[j];
    const double mean_pos = sum_pos / n_pos;
    const double mean_neg = sum_neg / n_neg;
    double ss_pos = 0.0;
    for (std::size_t j : pos) ss_pos += (row[j] - mean_pos) * (row[j] - mean_pos);
    double ss_neg = 0.0;
    for (std::size_t j : neg) ss_neg += (row[j] - mean_neg) * (row[j] - mean_neg);
    delta[i] = mean_pos - mean_neg;
    within[i] = ss_pos / n_pos + ss_neg / n_neg;
  }

  SparsityPath path;
  path.kind = ModelKind::l2;
  path.ranking = rank_all(delta, RankOrder::largest_magnitude_first).order;

  double plain = 0.0;
  for (double w : within) plain += w;

  // J(k) = J(m) + 0.5 * sum of delta^2 over the features ranked after k.
  std::vector<double> tail(m + 1, 0.0);
  for (std::size_t r = m; r-- > 0;) {
    const double di = delta[path.ranking[r]];
    tail[r] = tail[r + 1] + 0.5 * di * di;
  }
  path.records.resize(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    auto& rec = path.records[k];
    rec.k = k;
    rec.objective = plain + tail[k];
    if (k > 0) rec.added_feature = path.ranking[k - 1];
  }
  return path;
}

OnlineL2Trainer::OnlineL2Trainer(std::size_t dimension)
    : centroid_pos_(dimension, 0.0), centroid_neg_(dimension, 0.0) {}

void OnlineL2Trainer::observe(std::span<const double> sample, Label label) {
  if (sample.size() != dimension()) {
    throw DataError("sample has " + std::to_string(sample.size()) + " features, trainer expects " +
                    std::to_string(dimension()));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!std::isfinite(sample[i])) throw DataError("non-finite sample value");
  }
  if (label == Label::positive) {
    centroid_pos_ = recursive_centroid_update(centroid_pos_, count_pos_++, sample);
  } else {
    centroid_neg_ = recursive_centroid_update(centroid_neg_, count_neg_++, sample);
  }
}

CenterModel OnlineL2Trainer::snapshot(std::size_t k) const {
  if (count_pos_ == 0) throw DataError("class empty: positive");
  if (count_neg_ == 0) throw DataError("class empty: negative");
  return l2_model_from_centroids(centroid_pos_, centroid_neg_, k);
}

}  // namespace sparsecenter
