#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/relation.hpp"
#include "flownet/vertex_set.hpp"

namespace flownet {

// One row of a competition table: the matches between x and y were
// x_wins + y_wins many, x winning x_wins of them.
struct TableRow {
  std::string x;
  std::int64_t x_wins = 0;
  std::int64_t y_wins = 0;
  std::string y;
};

struct CompetitionTable {
  std::vector<TableRow> rows;
};

// A competition encoded as a complete loop-free digraph on at least two
// labeled vertices with nonnegative integer arc capacities. Immutable after
// construction; all transforms return new values.
class Network {
 public:
  Network(VertexSet vertices, std::vector<std::int64_t> capacities);

  static Network zero(VertexSet vertices);

  int size() const { return vertices_.size(); }
  const VertexSet& vertices() const { return vertices_; }

  std::int64_t capacity(int x, int y) const {
    return cap_[static_cast<std::size_t>(x) * size() + y];
  }

  std::int64_t outdegree(int x) const;
  std::int64_t indegree(int x) const;
  std::int64_t total_capacity() const;

  // Copy with one arc capacity replaced; x != y, value >= 0.
  Network with_capacity(int x, int y, std::int64_t value) const;

  bool operator==(const Network& other) const {
    return vertices_ == other.vertices_ && cap_ == other.cap_;
  }
  bool operator!=(const Network& other) const { return !(*this == other); }

 private:
  VertexSet vertices_;
  std::vector<std::int64_t> cap_;
};

// Builds the network of a competition table: wins accumulate additively per
// ordered pair. The vertex set is inferred from the rows in first-seen order
// (x before y within a row), or sorted lexicographically on request.
Network from_table(const CompetitionTable& table, bool sort_labels = false);
// Same, against a declared vertex set; rows may not mention other labels.
Network from_table(const CompetitionTable& table, const VertexSet& declared);

// Reversal: swaps every opposite arc pair. An involution.
Network reverse(const Network& n);
// Relabeling along a permutation of the vertex indices: vertex x takes the
// role of psi[x].
Network relabel(const Network& n, const std::vector<int>& psi);
Network scale(const Network& n, std::int64_t alpha);
Network add(const Network& a, const Network& b);

// Structural class memberships; the classes overlap, so all flags are
// reported at once.
struct NetworkClass {
  // Present iff every opposite arc pair sums to the same k.
  std::optional<std::int64_t> balance;
  // Present iff capacity depends only on the tail vertex (witness values).
  std::optional<std::vector<std::int64_t>> out_weight;
  // Present iff capacity depends only on the head vertex.
  std::optional<std::vector<std::int64_t>> in_weight;
  bool constant = false;
  // Outdegree equals indegree at every vertex.
  bool pseudo_symmetric = false;

  bool balanced() const { return balance.has_value(); }
};

NetworkClass classify(const Network& n);

// Margin function g(x,y) = c(x,y) - c(y,x); antisymmetric, zero diagonal.
ScoreMatrix margin(const Network& n);

// Embeds a relation as a network: arc capacity 1 exactly on the strict
// pairs. Needs at least two vertices.
Network network_from_relation(const Relation& r);

}  // namespace flownet
