#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sparsecenter/classify.hpp"
#include "sparsecenter/dataset.hpp"

namespace sparsecenter {

inline constexpr std::size_t kOracleMaxFeatures = 16;
inline constexpr double kOracleTolerance = 1e-9;

using IndexSet = std::vector<std::size_t>;

struct OracleResult {
  double best_objective = 0.0;
  /// Every set whose objective is within kOracleTolerance (relative) of the
  /// best one.
  std::vector<IndexSet> best_sets;
  std::map<IndexSet, double> per_set_objectives;
};

/// Centers that are optimal once the set of differing features is fixed:
/// class means (l2) or class medians (l1) on `selected`, the centroid
/// midpoint (l2) or pooled weighted median (l1) elsewhere.
struct SetOptimum {
  std::vector<double> theta_pos;
  std::vector<double> theta_neg;
};

SetOptimum set_optimum(const Dataset& d, const IndexSet& selected, ModelKind kind);

/// Enumerates all C(m, k) selected sets, evaluates the full objective at
/// each set's optimum and returns the minimum. Throws UsageError when
/// m > kOracleMaxFeatures or k > m.
OracleResult brute_force(const Dataset& d, std::size_t k, ModelKind kind);

/// Relative comparison used throughout the certification code:
/// |a - b| <= tol * max(|a|, |b|), or |a - b| <= 1e-14 so that values that
/// are zero up to round-off compare equal.
bool relatively_close(double a, double b, double tol);

}  // namespace sparsecenter
