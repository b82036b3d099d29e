#include "sparsecenter/sparse_l1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsecenter/errors.hpp"
#include "sparsecenter/ranking.hpp"

namespace sparsecenter {

L1TrainArtifacts l1_artifacts(const Dataset& d) {
  MedianSummary summary = median_summary(d);
  L1TrainArtifacts out;
  out.ranking = rank_all(summary.dispersions.e, RankOrder::smallest_first).order;
  out.median_pos = std::move(summary.median_pos);
  out.median_neg = std::move(summary.median_neg);
  out.pooled_median = std::move(summary.pooled_median);
  out.dispersions = std::move(summary.dispersions);
  return out;
}

namespace {

CenterModel assemble(const L1TrainArtifacts& a, std::size_t k, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  std::vector<double> theta_pos = a.pooled_median;
  std::vector<double> theta_neg = a.pooled_median;
  for (std::size_t i : chosen) {
    theta_pos[i] = a.median_pos[i];
    theta_neg[i] = a.median_neg[i];
  }
  return CenterModel(ModelKind::l1, k, std::move(chosen), std::move(theta_pos),
                     std::move(theta_neg));
}

void check_k(std::size_t k, std::size_t m) {
  if (k > m) {
    throw UsageError("k = " + std::to_string(k) + " is out of range [0, " + std::to_string(m) + "]");
  }
}

}  // namespace

CenterModel l1_model_from_artifacts(const L1TrainArtifacts& artifacts, std::size_t k) {
  check_k(k, artifacts.ranking.size());
  return assemble(artifacts, k,
                  {artifacts.ranking.begin(), artifacts.ranking.begin() + static_cast<std::ptrdiff_t>(k)});
}

CenterModel train_l1(const Dataset& d, std::size_t k) {
  check_k(k, d.num_features());
  MedianSummary summary = median_summary(d);
  L1TrainArtifacts a;
  a.median_pos = std::move(summary.median_pos);
  a.median_neg = std::move(summary.median_neg);
  a.pooled_median = std::move(summary.pooled_median);
  std::vector<std::size_t> chosen = top_k(summary.dispersions.e, RankOrder::smallest_first, k);
  a.dispersions = std::move(summary.dispersions);
  return assemble(a, k, std::move(chosen));
}

double objective_l1(const Dataset& d, std::span<const double> theta_pos,
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
    for (std::size_t j : pos) sum_pos += std::abs(row[j] - theta_pos[i]);
    for (std::size_t j : neg) sum_neg += std::abs(row[j] - theta_neg[i]);
  }
  return sum_pos / static_cast<double>(pos.size()) + sum_neg / static_cast<double>(neg.size());
}

double decomposed_objective_l1(const DispersionTriple& dispersions,
                               std::span<const std::size_t> selected) {
  const std::size_t m = dispersions.d_all.size();
  std::vector<bool> in_selected(m, false);
  for (std::size_t i : selected) {
    if (i >= m) throw UsageError("selected feature out of range");
    in_selected[i] = true;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    total += in_selected[i] ? dispersions.d_pos[i] + dispersions.d_neg[i] : dispersions.d_all[i];
  }
  return total;
}

SparsityPath sparsity_path_l1(const Dataset& d) {
  const L1TrainArtifacts a = l1_artifacts(d);
  const std::size_t m = a.ranking.size();
  SparsityPath path;
  path.kind = ModelKind::l1;
  path.ranking = a.ranking;

  // J(k) = sum(d_all) + sum of e over the first k ranked features; e <= 0,
  // so the running sum never increases.
  double base = 0.0;
  for (double v : a.dispersions.d_all) base += v;
  path.records.resize(m + 1);
  double running = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    auto& rec = path.records[k];
    rec.k = k;
    if (k > 0) {
      const std::size_t f = path.ranking[k - 1];
      running += a.dispersions.e[f];
      rec.added_feature = f;
    }
    rec.objective = base + running;
  }
  return path;
}

}  // namespace sparsecenter
