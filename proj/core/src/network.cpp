#include "flownet/network.hpp"

#include <algorithm>
#include <map>

#include "flownet/error.hpp"

namespace flownet {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    raise(errc::overflow, "capacity arithmetic overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    raise(errc::overflow, "capacity arithmetic overflow");
  }
  return out;
}

}  // namespace

Network::Network(VertexSet vertices, std::vector<std::int64_t> capacities)
    : vertices_(std::move(vertices)), cap_(std::move(capacities)) {
  const int n = vertices_.size();
  if (n < 2) {
    raise(errc::domain_too_small, "a network needs at least two vertices");
  }
  if (cap_.size() != static_cast<std::size_t>(n) * n) {
    raise(errc::malformed_input, "capacity table has wrong size");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::int64_t c = cap_[static_cast<std::size_t>(x) * n + y];
      if (x == y && c != 0) {
        raise(errc::malformed_input, "self-arcs are not allowed");
      }
      if (c < 0) {
        raise(errc::malformed_input, "negative capacity");
      }
    }
  }
}

Network Network::zero(VertexSet vertices) {
  const std::size_t n = static_cast<std::size_t>(vertices.size());
  return Network(std::move(vertices), std::vector<std::int64_t>(n * n, 0));
}

std::int64_t Network::outdegree(int x) const {
  if (x < 0 || x >= size()) {
    raise(errc::unknown_vertex, "vertex index out of range");
  }
  std::int64_t sum = 0;
  for (int y = 0; y < size(); ++y) sum = checked_add(sum, capacity(x, y));
  return sum;
}

std::int64_t Network::indegree(int x) const {
  if (x < 0 || x >= size()) {
    raise(errc::unknown_vertex, "vertex index out of range");
  }
  std::int64_t sum = 0;
  for (int y = 0; y < size(); ++y) sum = checked_add(sum, capacity(y, x));
  return sum;
}

std::int64_t Network::total_capacity() const {
  std::int64_t sum = 0;
  for (int x = 0; x < size(); ++x) sum = checked_add(sum, outdegree(x));
  return sum;
}

Network Network::with_capacity(int x, int y, std::int64_t value) const {
  if (x == y || x < 0 || y < 0 || x >= size() || y >= size()) {
    raise(errc::invalid_pair, "arc must join two distinct vertices");
  }
  if (value < 0) {
    raise(errc::malformed_input, "negative capacity");
  }
  std::vector<std::int64_t> caps = cap_;
  caps[static_cast<std::size_t>(x) * size() + y] = value;
  return Network(vertices_, std::move(caps));
}

namespace {

Network accumulate_table(const CompetitionTable& table, VertexSet vertices) {
  const int n = vertices.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  for (const TableRow& row : table.rows) {
    const int x = vertices.index_of(row.x);
    const int y = vertices.index_of(row.y);
    auto& forward = caps[static_cast<std::size_t>(x) * n + y];
    auto& backward = caps[static_cast<std::size_t>(y) * n + x];
    forward = checked_add(forward, row.x_wins);
    backward = checked_add(backward, row.y_wins);
  }
  return Network(std::move(vertices), std::move(caps));
}

void validate_rows(const CompetitionTable& table) {
  for (const TableRow& row : table.rows) {
    if (row.x == row.y) {
      raise(errc::malformed_input,
            "table row pits " + row.x + " against itself");
    }
    if (row.x_wins < 0 || row.y_wins < 0) {
      raise(errc::malformed_input, "negative win count");
    }
  }
}

}  // namespace

Network from_table(const CompetitionTable& table, bool sort_labels) {
  validate_rows(table);
  std::vector<std::string> labels;
  std::map<std::string, bool> seen;
  for (const TableRow& row : table.rows) {
    for (const std::string& label : {row.x, row.y}) {
      if (!seen.emplace(label, true).second) continue;
      labels.push_back(label);
    }
  }
  if (labels.size() < 2) {
    raise(errc::domain_too_small, "a competition needs at least two teams");
  }
  if (sort_labels) std::sort(labels.begin(), labels.end());
  return accumulate_table(table, VertexSet(std::move(labels)));
}

Network from_table(const CompetitionTable& table, const VertexSet& declared) {
  validate_rows(table);
  return accumulate_table(table, declared);
}

Network reverse(const Network& n) {
  const int size = n.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      caps[static_cast<std::size_t>(x) * size + y] = n.capacity(y, x);
    }
  }
  return Network(n.vertices(), std::move(caps));
}

Network relabel(const Network& n, const std::vector<int>& psi) {
  const int size = n.size();
  if (static_cast<int>(psi.size()) != size) {
    raise(errc::invalid_permutation, "permutation has wrong length");
  }
  std::vector<char> hit(static_cast<std::size_t>(size), 0);
  for (int v : psi) {
    if (v < 0 || v >= size || hit[v]) {
      raise(errc::invalid_permutation, "mapping is not a bijection");
    }
    hit[v] = 1;
  }
  std::vector<std::int64_t> caps(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x == y) continue;
      caps[static_cast<std::size_t>(psi[x]) * size + psi[y]] = n.capacity(x, y);
    }
  }
  return Network(n.vertices(), std::move(caps));
}

Network scale(const Network& n, std::int64_t alpha) {
  if (alpha < 1) {
    raise(errc::invalid_spec, "scale factor must be a positive integer");
  }
  const int size = n.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y) {
        caps[static_cast<std::size_t>(x) * size + y] =
            checked_mul(n.capacity(x, y), alpha);
      }
    }
  }
  return Network(n.vertices(), std::move(caps));
}

Network add(const Network& a, const Network& b) {
  if (a.vertices() != b.vertices()) {
    raise(errc::incompatible_networks,
          "networks live on different vertex sets");
  }
  const int size = a.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y) {
        caps[static_cast<std::size_t>(x) * size + y] =
            checked_add(a.capacity(x, y), b.capacity(x, y));
      }
    }
  }
  return Network(a.vertices(), std::move(caps));
}

NetworkClass classify(const Network& n) {
  const int size = n.size();
  NetworkClass out;

  const std::int64_t k = checked_add(n.capacity(0, 1), n.capacity(1, 0));
  bool balanced = true;
  for (int x = 0; x < size && balanced; ++x) {
    for (int y = x + 1; y < size; ++y) {
      if (checked_add(n.capacity(x, y), n.capacity(y, x)) != k) {
        balanced = false;
        break;
      }
    }
  }
  if (balanced) out.balance = k;

  bool in_o = true;
  std::vector<std::int64_t> omega_out(static_cast<std::size_t>(size), 0);
  for (int x = 0; x < size && in_o; ++x) {
    const std::int64_t w = n.capacity(x, x == 0 ? 1 : 0);
    omega_out[x] = w;
    for (int y = 0; y < size; ++y) {
      if (y != x && n.capacity(x, y) != w) {
        in_o = false;
        break;
      }
    }
  }
  if (in_o) out.out_weight = std::move(omega_out);

  bool in_i = true;
  std::vector<std::int64_t> omega_in(static_cast<std::size_t>(size), 0);
  for (int y = 0; y < size && in_i; ++y) {
    const std::int64_t w = n.capacity(y == 0 ? 1 : 0, y);
    omega_in[y] = w;
    for (int x = 0; x < size; ++x) {
      if (x != y && n.capacity(x, y) != w) {
        in_i = false;
        break;
      }
    }
  }
  if (in_i) out.in_weight = std::move(omega_in);

  out.constant = true;
  const std::int64_t c0 = n.capacity(0, 1);
  for (int x = 0; x < size && out.constant; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y && n.capacity(x, y) != c0) {
        out.constant = false;
        break;
      }
    }
  }

  out.pseudo_symmetric = true;
  for (int x = 0; x < size; ++x) {
    if (n.outdegree(x) != n.indegree(x)) {
      out.pseudo_symmetric = false;
      break;
    }
  }
  return out;
}

ScoreMatrix margin(const Network& n) {
  ScoreMatrix g(n.vertices());
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x != y) g.set(x, y, n.capacity(x, y) - n.capacity(y, x));
    }
  }
  return g;
}

Network network_from_relation(const Relation& r) {
  const int size = r.size();
  if (size < 2) {
    raise(errc::domain_too_small, "a network needs at least two vertices");
  }
  std::vector<std::int64_t> caps(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y && r.strictly(x, y)) {
        caps[static_cast<std::size_t>(x) * size + y] = 1;
      }
    }
  }
  return Network(r.vertices(), std::move(caps));
}

}  // namespace flownet
