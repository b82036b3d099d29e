#include "sparsecenter/sparsity_path.hpp"

#include <algorithm>

#include "sparsecenter/errors.hpp"

namespace sparsecenter {

std::vector<std::size_t> SparsityPath::selected(std::size_t k) const {
  if (k > ranking.size()) throw UsageError("k exceeds the number of features");
  std::vector<std::size_t> out(ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sparsecenter
