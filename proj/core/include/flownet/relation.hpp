#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/vertex_set.hpp"

namespace flownet {

// A binary relation on a finite vertex set: a total boolean membership table
// over ordered pairs, diagonal included. (x,y) being a member reads "x is at
// least as good as y".
class Relation {
 public:
  Relation(VertexSet vertices, std::vector<std::uint8_t> membership);

  static Relation empty(VertexSet vertices);
  static Relation total(VertexSet vertices);

  int size() const { return vertices_.size(); }
  const VertexSet& vertices() const { return vertices_; }

  bool contains(int x, int y) const {
    return member_[static_cast<std::size_t>(x) * size() + y] != 0;
  }
  void set(int x, int y, bool member) {
    member_[static_cast<std::size_t>(x) * size() + y] = member ? 1 : 0;
  }

  // x strictly above y: (x,y) in R and (y,x) not in R.
  bool strictly(int x, int y) const { return contains(x, y) && !contains(y, x); }
  // x tied with y: both directions present.
  bool tied(int x, int y) const { return contains(x, y) && contains(y, x); }

  bool has_empty_strict_part() const;

  bool operator==(const Relation& other) const {
    return vertices_ == other.vertices_ && member_ == other.member_;
  }
  bool operator!=(const Relation& other) const { return !(*this == other); }

 private:
  VertexSet vertices_;
  std::vector<std::uint8_t> member_;
};

struct RelationClassFlags {
  bool complete = false;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool quasi_transitive = false;
  bool acyclic = false;
  bool quasi_acyclic = false;
};

// A linear order on the vertex set, kept as a ranking from best to worst.
struct LinearOrder {
  VertexSet vertices;
  std::vector<int> ranking;

  Relation to_relation() const;
  // Position of vertex v in the ranking (0 = best).
  int position(int v) const;
  bool ranks_above(int x, int y) const { return position(x) < position(y); }
  // The top k vertices as a sorted index set.
  std::vector<int> top(int k) const;

  bool operator==(const LinearOrder& other) const {
    return ranking == other.ranking && vertices == other.vertices;
  }
  bool operator!=(const LinearOrder& other) const { return !(*this == other); }
  bool operator<(const LinearOrder& other) const {
    return ranking < other.ranking;
  }
};

Relation strict(const Relation& r);
Relation reverse_rel(const Relation& r);
// Restriction of r to a nonempty subset of its domain; the subset keeps the
// canonical order of the original labels.
Relation restrict_to(const Relation& r, const std::vector<int>& subset);

RelationClassFlags classify_relation(const Relation& r);

// Relation induced by arc scores: (x,y) is a member iff
// score(x,y) >= score(y,x), plus the full diagonal.
Relation relation_from_scores(const ScoreMatrix& scores);
// Relation induced by per-vertex scores: (x,y) member iff u(x) >= u(y).
Relation relation_from_vertex_scores(const VertexSet& vertices,
                                     const std::vector<std::int64_t>& score);

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

// Lazy lexicographic enumeration of the linear orders containing a relation
// (its linear extensions). Yields nothing when the relation is not acyclic.
// Single consumer; not shareable mid-iteration.
class LinearExtensionEnumerator {
 public:
  explicit LinearExtensionEnumerator(const Relation& r);

  std::optional<LinearOrder> next();

 private:
  VertexSet vertices_;
  int n_;
  std::vector<std::uint64_t> pred_;  // pred_[v]: vertices that must precede v
  std::uint64_t placed_ = 0;
  std::vector<int> prefix_;
  std::vector<int> cursor_;
  bool done_ = false;
};

LinearExtensionEnumerator linear_extensions(const Relation& r);
// Materializes every extension; throws errc::enumeration_limit past the cap.
std::vector<LinearOrder> linear_extensions_all(
    const Relation& r, std::size_t cap = kDefaultEnumerationCap);
// Count-only mode: subset dynamic programming, no materialization.
std::uint64_t count_linear_extensions(const Relation& r);

// One linear extension of r containing every forced pair, built by adding
// the pairs one at a time; errc::infeasible_forcing if a pair creates a
// cycle.
LinearOrder linear_extension_forcing(
    const Relation& r, const std::vector<std::pair<int, int>>& pairs);

// Linear refinements of a complete and quasi-acyclic relation: the linear
// extensions of its strict part. Throws errc::not_quasi_acyclic when the
// precondition fails.
LinearExtensionEnumerator linear_refinements(const Relation& r);
std::vector<LinearOrder> linear_refinements_all(
    const Relation& r, std::size_t cap = kDefaultEnumerationCap);
std::uint64_t count_linear_refinements(const Relation& r);

// All k-maximum sets: subsets W of size k with every member weakly above
// every non-member. Sets are sorted index vectors, listed lexicographically.
// Requires 1 <= k <= n-1.
std::vector<std::vector<int>> k_maximum_sets(const Relation& r, int k);

std::vector<int> maxima(const Relation& r);
std::vector<int> minima(const Relation& r);

}  // namespace flownet
