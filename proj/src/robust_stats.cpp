#include "sparsecenter/robust_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sparsecenter/errors.hpp"

namespace sparsecenter {

WeightedMedian weighted_median_sorted(std::span<const double> z, std::span<const double> w) {
  const std::size_t p = z.size();
  double total = 0.0;
  for (double wi : w) total += wi;
  const double half = 0.5 * total;
  const double tol = kHalfMassTolerance * total;

  double theta = z.empty() ? 0.0 : z.back();
  double cumulative = 0.0;
  std::size_t i = 0;
  while (i < p) {
    const double value = z[i];
    double group = 0.0;
    std::size_t next = i;
    while (next < p && z[next] == value) group += w[next++];
    if (group > 0.0) {
      cumulative += group;
      if (cumulative >= half - tol) {
        theta = value;
        if (std::abs(cumulative - half) <= tol) {
          // Flat stretch of the objective: take the midpoint up to the next
          // point that carries mass.
          for (std::size_t j = next; j < p; ++j) {
            if (w[j] > 0.0 && z[j] > value) {
              theta = (value + z[j]) / 2;
              break;
            }
          }
        }
        break;
      }
    }
    i = next;
  }

  double dispersion = 0.0;
  for (std::size_t j = 0; j < p; ++j) dispersion += w[j] * std::abs(z[j] - theta);
  return {theta, dispersion};
}

WeightedMedian weighted_median(std::span<const double> z, std::span<const double> w) {
  if (z.empty()) throw std::invalid_argument("weighted_median: empty input");
  if (z.size() != w.size()) {
    throw std::invalid_argument("weighted_median: " + std::to_string(z.size()) + " values but " +
                                std::to_string(w.size()) + " weights");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z[i])) throw std::invalid_argument("weighted_median: non-finite value");
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw std::invalid_argument("weighted_median: weights must be finite and nonnegative");
    }
    total += w[i];
  }
  if (!(total > 0.0)) throw std::invalid_argument("weighted_median: total weight is zero");

  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return z[a] < z[b] || (z[a] == z[b] && a < b);
  });
  std::vector<double> zs(z.size());
  std::vector<double> ws(z.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    zs[i] = z[order[i]];
    ws[i] = w[order[i]];
  }
  return weighted_median_sorted(zs, ws);
}

WeightedMedian median_sorted(std::span<const double> z) {
  const std::size_t p = z.size();
  const double theta = p % 2 == 1 ? z[p / 2] : (z[p / 2 - 1] + z[p / 2]) / 2;
  double dispersion = 0.0;
  for (double v : z) dispersion += std::abs(v - theta);
  return {theta, dispersion};
}

ClassCenters class_centroids(const Dataset& d) {
  const std::size_t m = d.num_features();
  const auto& pos = d.positive_indices();
  const auto& neg = d.negative_indices();
  const double n_pos = static_cast<double>(pos.size());
  const double n_neg = static_cast<double>(neg.size());
  ClassCenters out{std::vector<double>(m), std::vector<double>(m), CenterKind::mean};
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = d.feature_row(i);
    double sum_pos = 0.0;
    for (std::size_t j : pos) sum_pos += row[j];
    double sum_neg = 0.0;
    for (std::size_t j : neg) sum_neg += row[j];
    out.center_pos[i] = sum_pos / n_pos;
    out.center_neg[i] = sum_neg / n_neg;
  }
  return out;
}

MedianSummary median_summary(const Dataset& d) {
  const std::size_t m = d.num_features();
  const auto& pos = d.positive_indices();
  const auto& neg = d.negative_indices();
  const std::size_t n_pos = pos.size();
  const std::size_t n_neg = neg.size();
  const double w_pos = 1.0 / static_cast<double>(n_pos);
  const double w_neg = 1.0 / static_cast<double>(n_neg);

  MedianSummary out;
  out.median_pos.resize(m);
  out.median_neg.resize(m);
  out.pooled_median.resize(m);
  auto& disp = out.dispersions;
  disp.d_pos.resize(m);
  disp.d_neg.resize(m);
  disp.d_all.resize(m);
  disp.e.resize(m);

  std::vector<double> vals_pos(n_pos);
  std::vector<double> vals_neg(n_neg);
  std::vector<double> pooled(n_pos + n_neg);
  std::vector<double> weights(n_pos + n_neg);

  for (std::size_t i = 0; i < m; ++i) {
    const auto row = d.feature_row(i);
    for (std::size_t j = 0; j < n_pos; ++j) vals_pos[j] = row[pos[j]];
    for (std::size_t j = 0; j < n_neg; ++j) vals_neg[j] = row[neg[j]];
    std::sort(vals_pos.begin(), vals_pos.end());
    std::sort(vals_neg.begin(), vals_neg.end());

    const WeightedMedian med_pos = median_sorted(vals_pos);
    const WeightedMedian med_neg = median_sorted(vals_neg);
    out.median_pos[i] = med_pos.theta;
    out.median_neg[i] = med_neg.theta;
    disp.d_pos[i] = med_pos.dispersion / static_cast<double>(n_pos);
    disp.d_neg[i] = med_neg.dispersion / static_cast<double>(n_neg);

    // Merge the two sorted class samples, each carrying its class weight.
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t t = 0; t < n_pos + n_neg; ++t) {
      if (b == n_neg || (a < n_pos && vals_pos[a] <= vals_neg[b])) {
        pooled[t] = vals_pos[a++];
        weights[t] = w_pos;
      } else {
        pooled[t] = vals_neg[b++];
        weights[t] = w_neg;
      }
    }
    const WeightedMedian med_all = weighted_median_sorted(pooled, weights);
    out.pooled_median[i] = med_all.theta;
    disp.d_all[i] = med_all.dispersion;

    double e = (disp.d_pos[i] + disp.d_neg[i]) - disp.d_all[i];
    if (e > 0.0) {
      if (e > kDispersionGapTolerance * std::max(1.0, disp.d_all[i])) {
        throw ConsistencyError("dispersion gap e = " + std::to_string(e) + " > 0 at feature " +
                               std::to_string(i));
      }
      e = 0.0;
    }
    disp.e[i] = e;
  }
  return out;
}

ClassCenters class_medians(const Dataset& d) {
  MedianSummary summary = median_summary(d);
  return {std::move(summary.median_pos), std::move(summary.median_neg), CenterKind::median};
}

DispersionTriple dispersion_triple(const Dataset& d) {
  return median_summary(d).dispersions;
}

std::vector<double> recursive_centroid_update(std::span<const double> center, std::size_t count,
                                              std::span<const double> new_sample) {
  if (count == 0) return {new_sample.begin(), new_sample.end()};
  if (center.size() != new_sample.size()) {
    throw DataError("centroid has dimension " + std::to_string(center.size()) +
                    ", sample has " + std::to_string(new_sample.size()));
  }
  const double nu = static_cast<double>(count);
  const double keep = nu / (nu + 1.0);
  const double gain = 1.0 / (nu + 1.0);
  std::vector<double> out(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) out[i] = keep * center[i] + gain * new_sample[i];
  return out;
}

}  // namespace sparsecenter
