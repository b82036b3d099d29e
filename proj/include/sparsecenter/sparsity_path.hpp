#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparsecenter/classify.hpp"

namespace sparsecenter {

struct PathRecord {
  std::size_t k = 0;
  /// Training objective at the optimum for this k.
  double objective = 0.0;
  /// Feature that joins the selected set at this k; empty for k = 0.
  std::optional<std::size_t> added_feature;
};

/// Optimal models for every k = 0..m, nested along one ranking. Only
/// objectives are stored; models are rebuilt on demand.
struct SparsityPath {
  ModelKind kind = ModelKind::l2;
  /// Full feature ranking; the selected set for k is its first k entries.
  std::vector<std::size_t> ranking;
  std::vector<PathRecord> records;

  /// Selected set for k, sorted ascending.
  std::vector<std::size_t> selected(std::size_t k) const;
};

}  // namespace sparsecenter
