#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsecenter/dataset.hpp"

namespace sparsecenter {

enum class CenterKind { mean, median };

struct ClassCenters {
  std::vector<double> center_pos;
  std::vector<double> center_neg;
  CenterKind kind = CenterKind::mean;
};

/// Per-feature median dispersions. d_pos and d_neg are the within-class
/// average absolute deviations about the class medians, d_all the deviation
/// about the pooled weighted median (weights 1/n+ and 1/n-), and
/// e = (d_pos + d_neg) - d_all <= 0.
struct DispersionTriple {
  std::vector<double> d_pos;
  std::vector<double> d_neg;
  std::vector<double> d_all;
  std::vector<double> e;
};

struct WeightedMedian {
  double theta = 0.0;
  /// sum_i w_i |z_i - theta|, the minimal weighted absolute deviation.
  double dispersion = 0.0;
};

/// Relative tolerance used to decide W(zeta) == W/2 in the midpoint branch.
inline constexpr double kHalfMassTolerance = 1e-12;

/// Minimizer of sum_i w_i |z_i - theta|.
///
/// Let W(t) be the weight of points <= t and zeta the smallest support point
/// with W(zeta) >= W/2. If W(zeta) exceeds W/2 the median is zeta; if it
/// equals W/2 (up to kHalfMassTolerance * W) the median is the midpoint of
/// zeta and the next larger positive-weight point. Zero-weight points carry
/// no mass and never act as the next point. Equal values pool their weight.
///
/// Throws std::invalid_argument for empty or mismatched input, negative or
/// non-finite weights, non-finite values, or zero total weight.
WeightedMedian weighted_median(std::span<const double> z, std::span<const double> w);

/// Same rule for values already sorted ascending. No validation; used by
/// the per-feature kernels.
WeightedMedian weighted_median_sorted(std::span<const double> z, std::span<const double> w);

/// Unit-weight median of sorted values (midpoint rule for even counts).
/// The dispersion is the plain sum of absolute deviations.
WeightedMedian median_sorted(std::span<const double> z);

ClassCenters class_centroids(const Dataset& d);
ClassCenters class_medians(const Dataset& d);

/// Everything the sparse l1 trainer needs, computed in one sweep over the
/// features.
struct MedianSummary {
  std::vector<double> median_pos;
  std::vector<double> median_neg;
  std::vector<double> pooled_median;
  DispersionTriple dispersions;
};

/// Absolute tolerance (scaled by max(1, d_all_i)) above which a positive
/// e_i is treated as an internal error instead of round-off.
inline constexpr double kDispersionGapTolerance = 1e-9;

/// Computes class medians, the pooled weighted median and the dispersion
/// triple. Entries of e in (0, tol] are clamped to 0; anything larger throws
/// ConsistencyError.
MedianSummary median_summary(const Dataset& d);

DispersionTriple dispersion_triple(const Dataset& d);

/// (count / (count + 1)) * center + new_sample / (count + 1). With count 0
/// the result is the new sample.
std::vector<double> recursive_centroid_update(std::span<const double> center, std::size_t count,
                                              std::span<const double> new_sample);

}  // namespace sparsecenter
