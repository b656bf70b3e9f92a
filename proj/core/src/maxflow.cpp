#include "flownet/maxflow.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "flownet/error.hpp"

namespace flownet {
namespace {

void require_pair(const Network& n, int s, int t) {
  if (s < 0 || t < 0 || s >= n.size() || t >= n.size()) {
    raise(errc::unknown_vertex, "vertex index out of range");
  }
  if (s == t) {
    raise(errc::invalid_pair, "source and sink must differ");
  }
}

// Arc flows with residual capacity c(u,v) - f(u,v) + f(v,u). Augmenting
// along the reverse direction first cancels opposing flow, which keeps
// 0 <= f <= c per arc and flows integral.
struct FlowState {
  int n;
  const Network& net;
  std::vector<std::int64_t> flow;

  explicit FlowState(const Network& network)
      : n(network.size()),
        net(network),
        flow(static_cast<std::size_t>(network.size()) * network.size(), 0) {}

  std::int64_t& f(int u, int v) {
    return flow[static_cast<std::size_t>(u) * n + v];
  }
  std::int64_t residual(int u, int v) const {
    return net.capacity(u, v) -
           flow[static_cast<std::size_t>(u) * n + v] +
           flow[static_cast<std::size_t>(v) * n + u];
  }
};

// Shortest augmenting paths (breadth-first residual search) from the null
// flow. Since every augmenting path is simple and starts at the source, no
// flow ever enters the source. Returns the flow value.
std::int64_t run_augmenting_paths(FlowState& st, int s, int t) {
  const int n = st.n;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::int64_t value = 0;
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty() && parent[t] < 0) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < n; ++v) {
        if (v == u || parent[v] >= 0 || st.residual(u, v) <= 0) continue;
        parent[v] = u;
        frontier.push(v);
      }
    }
    if (parent[t] < 0) break;
    std::int64_t bottleneck = -1;
    for (int v = t; v != s; v = parent[v]) {
      const std::int64_t r = st.residual(parent[v], v);
      bottleneck = bottleneck < 0 ? r : std::min(bottleneck, r);
    }
    for (int v = t; v != s; v = parent[v]) {
      const int u = parent[v];
      const std::int64_t cancel = std::min(bottleneck, st.f(v, u));
      st.f(v, u) -= cancel;
      st.f(u, v) += bottleneck - cancel;
    }
    value += bottleneck;
  }
  return value;
}

}  // namespace

std::int64_t max_flow_value(const Network& n, int s, int t) {
  require_pair(n, s, t);
  FlowState st(n);
  return run_augmenting_paths(st, s, t);
}

Flow max_flow_witness(const Network& n, int s, int t) {
  require_pair(n, s, t);
  FlowState st(n);
  Flow out;
  out.source = s;
  out.sink = t;
  out.value = run_augmenting_paths(st, s, t);
  out.values = std::move(st.flow);
  return out;
}

Cut min_cut(const Network& n, int s, int t) {
  require_pair(n, s, t);
  FlowState st(n);
  run_augmenting_paths(st, s, t);
  std::vector<char> reached(static_cast<std::size_t>(n.size()), 0);
  reached[s] = 1;
  std::queue<int> frontier;
  frontier.push(s);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < n.size(); ++v) {
      if (v == u || reached[v] || st.residual(u, v) <= 0) continue;
      reached[v] = 1;
      frontier.push(v);
    }
  }
  Cut cut;
  for (int v = 0; v < n.size(); ++v) {
    if (reached[v]) cut.side.push_back(v);
  }
  return cut;
}

std::int64_t cut_capacity(const Network& n, const Cut& cut) {
  std::vector<char> in_side(static_cast<std::size_t>(n.size()), 0);
  for (int v : cut.side) {
    if (v < 0 || v >= n.size()) {
      raise(errc::unknown_vertex, "cut contains an unknown vertex");
    }
    in_side[v] = 1;
  }
  int members = 0;
  for (char c : in_side) members += c;
  if (members == 0 || members == n.size()) {
    raise(errc::invalid_cut, "cut side must be a proper nonempty subset");
  }
  std::int64_t total = 0;
  for (int x = 0; x < n.size(); ++x) {
    if (!in_side[x]) continue;
    for (int y = 0; y < n.size(); ++y) {
      if (!in_side[y]) total += n.capacity(x, y);
    }
  }
  return total;
}

FlowMatrix flow_matrix(const Network& n) {
  FlowMatrix m(n.vertices());
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x != y) m.set(x, y, max_flow_value(n, x, y));
    }
  }
  return m;
}

namespace {

// Depth-first enumeration of path multisets with memoized residual
// capacities. States are small because the guard bounds total capacity.
struct OracleSearch {
  int n;
  int s;
  int t;
  std::vector<std::int64_t> residual;
  std::map<std::vector<std::int64_t>, std::int64_t> memo;

  std::int64_t& cap(int u, int v) {
    return residual[static_cast<std::size_t>(u) * n + v];
  }

  void collect_paths(int u, std::uint32_t visited, std::vector<int>& path,
                     std::vector<std::vector<int>>& out) {
    if (u == t) {
      out.push_back(path);
      return;
    }
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((visited & bit) != 0 || cap(u, v) < 1) continue;
      path.push_back(v);
      collect_paths(v, visited | bit, path, out);
      path.pop_back();
    }
  }

  std::int64_t best() {
    auto hit = memo.find(residual);
    if (hit != memo.end()) return hit->second;
    std::vector<std::vector<int>> paths;
    std::vector<int> prefix{s};
    collect_paths(s, std::uint32_t{1} << s, prefix, paths);
    std::int64_t best_k = 0;
    for (const auto& path : paths) {
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        --cap(path[i], path[i + 1]);
      }
      best_k = std::max(best_k, 1 + best());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        ++cap(path[i], path[i + 1]);
      }
    }
    memo.emplace(residual, best_k);
    return best_k;
  }
};

}  // namespace

std::int64_t lambda_oracle(const Network& n, int s, int t,
                           const OracleGuard& guard) {
  require_pair(n, s, t);
  const int max_n = std::min(guard.max_n, 16);  // visited-set mask width
  if (n.size() > max_n || n.total_capacity() > guard.max_total_capacity) {
    raise(errc::oracle_too_large,
          "oracle guard: needs n <= " + std::to_string(max_n) +
              " and total capacity <= " +
              std::to_string(guard.max_total_capacity));
  }
  OracleSearch search{n.size(), s, t, {}, {}};
  search.residual.resize(static_cast<std::size_t>(n.size()) * n.size());
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      search.cap(x, y) = n.capacity(x, y);
    }
  }
  return search.best();
}

bool check_gomory_hu(const FlowMatrix& m) {
  return satisfies_gomory_hu_condition(m);
}

}  // namespace flownet
