#pragma once

#include <cstdint>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/network.hpp"

namespace flownet {

// All-pairs maximum-flow values; satisfies the Gomory-Hu triple inequality.
using FlowMatrix = ScoreMatrix;

// A feasible integral flow between two distinct vertices: per-arc values
// within capacity, conservation everywhere else.
struct Flow {
  int source = 0;
  int sink = 0;
  std::vector<std::int64_t> values;  // n*n arc flows, row-major
  std::int64_t value = 0;

  std::int64_t at(int x, int y, int n) const {
    return values[static_cast<std::size_t>(x) * n + y];
  }
};

// A cut: the side containing the source, as a sorted set of vertex indices.
struct Cut {
  std::vector<int> side;
};

// Maximum flow value by shortest augmenting paths from the null flow.
std::int64_t max_flow_value(const Network& n, int s, int t);

// A maximum flow whose inflow at the source is zero on every arc, as the
// augmenting-path construction guarantees.
Flow max_flow_witness(const Network& n, int s, int t);

// A minimum cut: the vertices reachable from s in the final residual graph.
Cut min_cut(const Network& n, int s, int t);

// Total capacity leaving the cut side. The side must be a proper nonempty
// subset of the vertices.
std::int64_t cut_capacity(const Network& n, const Cut& cut);

// Maximum flow value for every ordered pair, pairs evaluated independently.
FlowMatrix flow_matrix(const Network& n);

struct OracleGuard {
  int max_n = 5;
  std::int64_t max_total_capacity = 12;
};

// Brute-force verification oracle: the largest k such that k paths from s to
// t can be listed using each arc at most its capacity many times. Exponential
// by design; guarded to desk-size instances and memoized on residual
// capacities. Always equals max_flow_value.
std::int64_t lambda_oracle(const Network& n, int s, int t,
                           const OracleGuard& guard = {});

// Same predicate as satisfies_gomory_hu_condition, named for flow matrices:
// every matrix produced by flow_matrix must pass.
bool check_gomory_hu(const FlowMatrix& m);

}  // namespace flownet
