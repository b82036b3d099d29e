#include "sparsecenter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sparsecenter/errors.hpp"
#include "sparsecenter/robust_stats.hpp"
#include "sparsecenter/sparse_l1.hpp"
#include "sparsecenter/sparse_l2.hpp"

namespace sparsecenter {

bool relatively_close(double a, double b, double tol) {
  const double diff = std::abs(a - b);
  return diff <= tol * std::max(std::abs(a), std::abs(b)) || diff <= 1e-14;
}

namespace {

double class_mean(std::span<const double> row, const std::vector<std::size_t>& idx) {
  double s = 0.0;
  for (std::size_t j : idx) s += row[j];
  return s / static_cast<double>(idx.size());
}

double class_median(std::span<const double> row, const std::vector<std::size_t>& idx) {
  std::vector<double> z;
  z.reserve(idx.size());
  for (std::size_t j : idx) z.push_back(row[j]);
  const std::vector<double> w(z.size(), 1.0);
  return weighted_median(z, w).theta;
}

double pooled_median(const Dataset& d, std::span<const double> row) {
  std::vector<double> w(row.size());
  const double w_pos = 1.0 / static_cast<double>(d.num_positive());
  const double w_neg = 1.0 / static_cast<double>(d.num_negative());
  for (std::size_t j = 0; j < row.size(); ++j) {
    w[j] = d.labels()[j] == Label::positive ? w_pos : w_neg;
  }
  return weighted_median(row, w).theta;
}

}  // namespace

SetOptimum set_optimum(const Dataset& d, const IndexSet& selected, ModelKind kind) {
  const std::size_t m = d.num_features();
  std::vector<bool> in_set(m, false);
  for (std::size_t i : selected) {
    if (i >= m) throw UsageError("selected feature out of range");
    in_set[i] = true;
  }
  SetOptimum out{std::vector<double>(m), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = d.feature_row(i);
    if (kind == ModelKind::l2) {
      const double mp = class_mean(row, d.positive_indices());
      const double mn = class_mean(row, d.negative_indices());
      if (in_set[i]) {
        out.theta_pos[i] = mp;
        out.theta_neg[i] = mn;
      } else {
        out.theta_pos[i] = out.theta_neg[i] = (mp + mn) / 2;
      }
    } else if (in_set[i]) {
      out.theta_pos[i] = class_median(row, d.positive_indices());
      out.theta_neg[i] = class_median(row, d.negative_indices());
    } else {
      out.theta_pos[i] = out.theta_neg[i] = pooled_median(d, row);
    }
  }
  return out;
}

OracleResult brute_force(const Dataset& d, std::size_t k, ModelKind kind) {
  const std::size_t m = d.num_features();
  if (m > kOracleMaxFeatures) {
    throw UsageError("brute force is limited to " + std::to_string(kOracleMaxFeatures) +
                     " features, dataset has " + std::to_string(m));
  }
  if (k > m) throw UsageError("k = " + std::to_string(k) + " exceeds " + std::to_string(m));

  OracleResult result;
  result.best_objective = std::numeric_limits<double>::infinity();

  // Walk every k-subset of {0..m-1} via a selection mask in lexicographic
  // order (prev_permutation on a mask with k leading ones).
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    IndexSet set;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask[i]) set.push_back(i);
    }
    const SetOptimum opt = set_optimum(d, set, kind);
    const double value = kind == ModelKind::l2 ? objective_l2(d, opt.theta_pos, opt.theta_neg)
                                               : objective_l1(d, opt.theta_pos, opt.theta_neg);
    result.best_objective = std::min(result.best_objective, value);
    result.per_set_objectives.emplace(std::move(set), value);
  } while (std::prev_permutation(mask.begin(), mask.end()));

  for (const auto& [set, value] : result.per_set_objectives) {
    if (relatively_close(value, result.best_objective, kOracleTolerance)) {
      result.best_sets.push_back(set);
    }
  }
  return result;
}

}  // namespace sparsecenter
