#include "flownet/matrix.hpp"

#include <algorithm>

namespace flownet {

ScoreMatrix::ScoreMatrix(VertexSet vertices, std::int64_t fill)
    : vertices_(std::move(vertices)),
      values_(static_cast<std::size_t>(vertices_.size()) * vertices_.size(),
              fill) {
  for (int x = 0; x < size(); ++x) set(x, x, 0);
}

bool satisfies_gomory_hu_condition(const ScoreMatrix& scores) {
  const int n = scores.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (scores.at(x, z) < std::min(scores.at(x, y), scores.at(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace flownet
