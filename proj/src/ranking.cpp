#include "sparsecenter/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sparsecenter {

bool ranks_before(std::span<const double> scores, RankOrder kind, std::size_t a, std::size_t b) {
  double ka = scores[a];
  double kb = scores[b];
  if (kind == RankOrder::largest_magnitude_first) {
    ka = -std::abs(ka);
    kb = -std::abs(kb);
  }
  return ka < kb || (ka == kb && a < b);
}

std::vector<std::size_t> top_k(std::span<const double> scores, RankOrder kind, std::size_t k) {
  k = std::min(k, scores.size());
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto before = [&](std::size_t a, std::size_t b) { return ranks_before(scores, kind, a, b); };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(), before);
  idx.resize(k);
  return idx;
}

RankedScores rank_all(std::vector<double> scores, RankOrder kind) {
  RankedScores out;
  out.order_kind = kind;
  out.order.resize(scores.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(),
            [&](std::size_t a, std::size_t b) { return ranks_before(scores, kind, a, b); });
  out.scores = std::move(scores);
  return out;
}

}  // namespace sparsecenter
