#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sparsecenter {

enum class RankOrder {
  largest_magnitude_first,  // |score| nonincreasing
  smallest_first,           // score nondecreasing
};

/// Per-feature scores and the induced total order. Ties are broken by
/// ascending feature index, so the order is fully deterministic.
struct RankedScores {
  std::vector<double> scores;
  RankOrder order_kind = RankOrder::largest_magnitude_first;
  /// First `order.size()` positions of the ranking. Either a full
  /// permutation of the features or a top-k prefix.
  std::vector<std::size_t> order;
};

/// True when feature a precedes feature b in the ranking.
bool ranks_before(std::span<const double> scores, RankOrder kind, std::size_t a, std::size_t b);

/// The first k features of the ranking, in rank order. O(m log k).
std::vector<std::size_t> top_k(std::span<const double> scores, RankOrder kind, std::size_t k);

/// Full ranking. O(m log m).
RankedScores rank_all(std::vector<double> scores, RankOrder kind);

}  // namespace sparsecenter
