#pragma once

#include <cstdint>
#include <vector>

#include "flownet/vertex_set.hpp"

namespace flownet {

// Square integer score table over the ordered pairs of a vertex set.
// Holds all-pairs maximum-flow values, widest-path strengths, margins and
// any other arc score used to induce a relation. The diagonal is stored for
// uniformity and stays 0 unless a caller sets it.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(VertexSet vertices, std::int64_t fill = 0);

  int size() const { return vertices_.size(); }
  const VertexSet& vertices() const { return vertices_; }

  std::int64_t at(int x, int y) const {
    return values_[static_cast<std::size_t>(x) * size() + y];
  }
  void set(int x, int y, std::int64_t value) {
    values_[static_cast<std::size_t>(x) * size() + y] = value;
  }

  bool operator==(const ScoreMatrix& other) const {
    return vertices_ == other.vertices_ && values_ == other.values_;
  }
  bool operator!=(const ScoreMatrix& other) const { return !(*this == other); }

 private:
  VertexSet vertices_;
  std::vector<std::int64_t> values_;
};

// True iff score(x,z) >= min(score(x,y), score(y,z)) for all distinct
// x, y, z. Relations induced by scores with this property are complete and
// quasi-transitive.
bool satisfies_gomory_hu_condition(const ScoreMatrix& scores);

}  // namespace flownet
