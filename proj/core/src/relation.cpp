#include "flownet/relation.hpp"

#include <algorithm>
#include <string>

#include "flownet/error.hpp"

namespace flownet {
namespace {

constexpr int kMaxEnumerationDomain = 64;
constexpr int kMaxCountDomain = 20;  // 20! still fits in uint64

// Cycle check on the off-diagonal digraph of r via iterative three-color
// depth-first search.
bool digraph_acyclic(const Relation& r) {
  const int n = r.size();
  std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> stack;
  std::vector<int> next_child(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    stack.push_back(root);
    next_child[root] = 0;
    while (!stack.empty()) {
      int u = stack.back();
      bool descended = false;
      for (int& v = next_child[u]; v < n; ++v) {
        if (v == u || !r.contains(u, v)) continue;
        if (color[v] == 1) return false;
        if (color[v] == 0) {
          color[v] = 1;
          next_child[v] = 0;
          stack.push_back(v);
          descended = true;
          ++v;
          break;
        }
      }
      if (!descended && stack.back() == u) {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

Relation::Relation(VertexSet vertices, std::vector<std::uint8_t> membership)
    : vertices_(std::move(vertices)), member_(std::move(membership)) {
  const std::size_t expected =
      static_cast<std::size_t>(vertices_.size()) * vertices_.size();
  if (member_.size() != expected) {
    raise(errc::malformed_input, "membership table has wrong size");
  }
}

Relation Relation::empty(VertexSet vertices) {
  const std::size_t n = static_cast<std::size_t>(vertices.size());
  return Relation(std::move(vertices), std::vector<std::uint8_t>(n * n, 0));
}

Relation Relation::total(VertexSet vertices) {
  const std::size_t n = static_cast<std::size_t>(vertices.size());
  return Relation(std::move(vertices), std::vector<std::uint8_t>(n * n, 1));
}

bool Relation::has_empty_strict_part() const {
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (x != y && strictly(x, y)) return false;
    }
  }
  return true;
}

Relation strict(const Relation& r) {
  Relation out = Relation::empty(r.vertices());
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (r.strictly(x, y)) out.set(x, y, true);
    }
  }
  return out;
}

Relation reverse_rel(const Relation& r) {
  Relation out = Relation::empty(r.vertices());
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (r.contains(y, x)) out.set(x, y, true);
    }
  }
  return out;
}

Relation restrict_to(const Relation& r, const std::vector<int>& subset) {
  if (subset.empty()) {
    raise(errc::invalid_restriction, "restriction to the empty set");
  }
  std::vector<int> keep = subset;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  for (int v : keep) labels.push_back(r.vertices().label(v));
  Relation out = Relation::empty(VertexSet(std::move(labels)));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.set(static_cast<int>(i), static_cast<int>(j),
              r.contains(keep[i], keep[j]));
    }
  }
  return out;
}

RelationClassFlags classify_relation(const Relation& r) {
  const int n = r.size();
  RelationClassFlags f;

  f.reflexive = true;
  for (int x = 0; x < n; ++x) {
    if (!r.contains(x, x)) f.reflexive = false;
  }

  // Complete relations are total on ordered pairs, the diagonal included.
  f.complete = f.reflexive;
  for (int x = 0; x < n && f.complete; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!r.contains(x, y) && !r.contains(y, x)) {
        f.complete = false;
        break;
      }
    }
  }

  f.antisymmetric = true;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (r.contains(x, y) && r.contains(y, x)) f.antisymmetric = false;
    }
  }

  auto transitive = [n](const Relation& rel) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!rel.contains(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (rel.contains(y, z) && !rel.contains(x, z)) return false;
        }
      }
    }
    return true;
  };

  const Relation s = strict(r);
  f.transitive = transitive(r);
  f.quasi_transitive = transitive(s);
  f.acyclic = digraph_acyclic(r);
  f.quasi_acyclic = digraph_acyclic(s);
  return f;
}

Relation relation_from_scores(const ScoreMatrix& scores) {
  Relation out = Relation::empty(scores.vertices());
  const int n = scores.size();
  for (int x = 0; x < n; ++x) {
    out.set(x, x, true);
    for (int y = 0; y < n; ++y) {
      if (y != x && scores.at(x, y) >= scores.at(y, x)) out.set(x, y, true);
    }
  }
  return out;
}

Relation relation_from_vertex_scores(const VertexSet& vertices,
                                     const std::vector<std::int64_t>& score) {
  if (static_cast<int>(score.size()) != vertices.size()) {
    raise(errc::malformed_input, "one score per vertex required");
  }
  Relation out = Relation::empty(vertices);
  for (int x = 0; x < vertices.size(); ++x) {
    for (int y = 0; y < vertices.size(); ++y) {
      if (score[x] >= score[y]) out.set(x, y, true);
    }
  }
  return out;
}

Relation LinearOrder::to_relation() const {
  Relation out = Relation::empty(vertices);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i; j < ranking.size(); ++j) {
      out.set(ranking[i], ranking[j], true);
    }
  }
  return out;
}

int LinearOrder::position(int v) const {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i] == v) return static_cast<int>(i);
  }
  raise(errc::unknown_vertex, "vertex not in ranking");
}

std::vector<int> LinearOrder::top(int k) const {
  std::vector<int> out(ranking.begin(), ranking.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

LinearExtensionEnumerator::LinearExtensionEnumerator(const Relation& r)
    : vertices_(r.vertices()), n_(r.size()) {
  if (n_ > kMaxEnumerationDomain) {
    raise(errc::enumeration_limit,
          "extension enumeration supports at most " +
              std::to_string(kMaxEnumerationDomain) + " vertices");
  }
  pred_.assign(static_cast<std::size_t>(n_), 0);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (x != y && r.contains(x, y)) pred_[y] |= std::uint64_t{1} << x;
    }
  }
  cursor_.push_back(0);
}

std::optional<LinearOrder> LinearExtensionEnumerator::next() {
  if (done_) return std::nullopt;
  auto backtrack = [this]() {
    const int v = prefix_.back();
    prefix_.pop_back();
    placed_ &= ~(std::uint64_t{1} << v);
    cursor_.pop_back();
    cursor_.back() = v + 1;
  };
  while (true) {
    const int depth = static_cast<int>(prefix_.size());
    if (depth == n_) {
      LinearOrder out{vertices_, prefix_};
      backtrack();
      return out;
    }
    int chosen = -1;
    for (int v = cursor_[depth]; v < n_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((placed_ & bit) == 0 && (pred_[v] & ~placed_) == 0) {
        chosen = v;
        break;
      }
    }
    if (chosen < 0) {
      if (depth == 0) {
        done_ = true;
        return std::nullopt;
      }
      backtrack();
      continue;
    }
    cursor_[depth] = chosen;
    prefix_.push_back(chosen);
    placed_ |= std::uint64_t{1} << chosen;
    cursor_.push_back(0);
  }
}

LinearExtensionEnumerator linear_extensions(const Relation& r) {
  return LinearExtensionEnumerator(r);
}

std::vector<LinearOrder> linear_extensions_all(const Relation& r,
                                               std::size_t cap) {
  std::vector<LinearOrder> out;
  LinearExtensionEnumerator e(r);
  while (auto order = e.next()) {
    if (out.size() >= cap) {
      raise(errc::enumeration_limit,
            "more than " + std::to_string(cap) + " linear extensions");
    }
    out.push_back(std::move(*order));
  }
  return out;
}

std::uint64_t count_linear_extensions(const Relation& r) {
  const int n = r.size();
  if (n > kMaxCountDomain) {
    raise(errc::enumeration_limit,
          "extension counting supports at most " +
              std::to_string(kMaxCountDomain) + " vertices");
  }
  std::vector<std::uint32_t> pred(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && r.contains(x, y)) pred[y] |= std::uint32_t{1} << x;
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // ways[mask]: completions once the vertices in mask are placed.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(full) + 1, 0);
  ways[full] = 1;
  for (std::uint32_t mask = full; mask-- > 0;) {
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((mask & bit) == 0 && (pred[v] & ~mask) == 0) {
        total += ways[mask | bit];
      }
    }
    ways[mask] = total;
  }
  return ways[0];
}

LinearOrder linear_extension_forcing(
    const Relation& r, const std::vector<std::pair<int, int>>& pairs) {
  Relation augmented = r;
  for (const auto& [x, y] : pairs) {
    if (x == y || x < 0 || y < 0 || x >= r.size() || y >= r.size()) {
      raise(errc::invalid_pair, "forced pair must join two distinct vertices");
    }
    augmented.set(x, y, true);
    if (!digraph_acyclic(augmented)) {
      raise(errc::infeasible_forcing,
            "forcing " + r.vertices().label(x) + " above " +
                r.vertices().label(y) + " creates a cycle");
    }
  }
  if (!digraph_acyclic(augmented)) {
    raise(errc::infeasible_forcing, "relation admits no linear extension");
  }
  LinearExtensionEnumerator e(augmented);
  auto first = e.next();
  if (!first) {
    raise(errc::infeasible_forcing, "relation admits no linear extension");
  }
  return *first;
}

namespace {

void require_complete_quasi_acyclic(const Relation& r) {
  const RelationClassFlags f = classify_relation(r);
  if (!f.complete || !f.quasi_acyclic) {
    raise(errc::not_quasi_acyclic,
          "linear refinements need a complete, quasi-acyclic relation");
  }
}

}  // namespace

LinearExtensionEnumerator linear_refinements(const Relation& r) {
  require_complete_quasi_acyclic(r);
  return LinearExtensionEnumerator(strict(r));
}

std::vector<LinearOrder> linear_refinements_all(const Relation& r,
                                                std::size_t cap) {
  require_complete_quasi_acyclic(r);
  return linear_extensions_all(strict(r), cap);
}

std::uint64_t count_linear_refinements(const Relation& r) {
  require_complete_quasi_acyclic(r);
  return count_linear_extensions(strict(r));
}

std::vector<std::vector<int>> k_maximum_sets(const Relation& r, int k) {
  const int n = r.size();
  if (k < 1 || k > n - 1) {
    raise(errc::invalid_k, "k must lie in [1, n-1]");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<char> in_set(static_cast<std::size_t>(n));
  while (true) {
    std::fill(in_set.begin(), in_set.end(), 0);
    for (int v : pick) in_set[v] = 1;
    bool good = true;
    for (int x = 0; x < n && good; ++x) {
      if (!in_set[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!in_set[y] && !r.contains(x, y)) {
          good = false;
          break;
        }
      }
    }
    if (good) out.push_back(pick);
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<int> maxima(const Relation& r) {
  std::vector<int> out;
  for (int x = 0; x < r.size(); ++x) {
    bool top = true;
    for (int y = 0; y < r.size(); ++y) {
      if (y != x && !r.contains(x, y)) {
        top = false;
        break;
      }
    }
    if (top) out.push_back(x);
  }
  return out;
}

std::vector<int> minima(const Relation& r) { return maxima(reverse_rel(r)); }

}  // namespace flownet
