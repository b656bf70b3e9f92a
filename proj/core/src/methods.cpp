#include "flownet/methods.hpp"

#include <algorithm>

#include "flownet/error.hpp"

namespace flownet {

const char* method_name(MethodId m) {
  switch (m) {
    case MethodId::flow:
      return "flow";
    case MethodId::borda:
      return "borda";
    case MethodId::dual_borda:
      return "dual-borda";
    case MethodId::schulze:
      return "schulze";
  }
  return "?";
}

std::optional<MethodId> parse_method(const std::string& name) {
  for (MethodId m : kAllMethods) {
    if (name == method_name(m)) return m;
  }
  if (name == "dual_borda") return MethodId::dual_borda;
  return std::nullopt;
}

Relation flow_relation(const Network& n) {
  return relation_from_scores(flow_matrix(n));
}

Relation borda_relation(const Network& n) {
  std::vector<std::int64_t> score(static_cast<std::size_t>(n.size()));
  for (int x = 0; x < n.size(); ++x) score[x] = n.outdegree(x);
  return relation_from_vertex_scores(n.vertices(), score);
}

Relation dual_borda_relation(const Network& n) {
  std::vector<std::int64_t> score(static_cast<std::size_t>(n.size()));
  for (int x = 0; x < n.size(); ++x) score[x] = -n.indegree(x);
  return relation_from_vertex_scores(n.vertices(), score);
}

StrengthMatrix schulze_strength(const Network& n) {
  StrengthMatrix s(n.vertices());
  const int size = n.size();
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y) s.set(x, y, n.capacity(x, y));
    }
  }
  for (int via = 0; via < size; ++via) {
    for (int x = 0; x < size; ++x) {
      if (x == via) continue;
      for (int y = 0; y < size; ++y) {
        if (y == via || y == x) continue;
        const std::int64_t through = std::min(s.at(x, via), s.at(via, y));
        if (through > s.at(x, y)) s.set(x, y, through);
      }
    }
  }
  return s;
}

Relation schulze_relation(const Network& n) {
  return relation_from_scores(schulze_strength(n));
}

Relation method_relation(MethodId m, const Network& n) {
  switch (m) {
    case MethodId::flow:
      return flow_relation(n);
    case MethodId::borda:
      return borda_relation(n);
    case MethodId::dual_borda:
      return dual_borda_relation(n);
    case MethodId::schulze:
      return schulze_relation(n);
  }
  raise(errc::invalid_spec, "unknown method");
}

LinearExtensionEnumerator rule(MethodId m, const Network& n) {
  return linear_refinements(method_relation(m, n));
}

std::vector<LinearOrder> rule_all(MethodId m, const Network& n,
                                  std::size_t cap) {
  return linear_refinements_all(method_relation(m, n), cap);
}

std::uint64_t rule_count(MethodId m, const Network& n) {
  return count_linear_refinements(method_relation(m, n));
}

std::vector<std::vector<int>> solution(MethodId m, const Network& n, int k) {
  return k_maximum_sets(method_relation(m, n), k);
}

MethodComparison compare_methods(const Network& n,
                                 const std::vector<MethodId>& methods) {
  if (methods.size() < 2) {
    raise(errc::invalid_spec, "comparison needs at least two methods");
  }
  MethodComparison out;
  out.methods = methods;
  std::vector<Relation> relations;
  relations.reserve(methods.size());
  for (MethodId m : methods) relations.push_back(method_relation(m, n));

  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x == y) continue;
      PairVerdict verdict;
      verdict.x = x;
      verdict.y = y;
      for (const Relation& r : relations) {
        verdict.member.push_back(r.contains(x, y));
      }
      const bool agree = std::all_of(
          verdict.member.begin(), verdict.member.end(),
          [&](bool b) { return b == verdict.member.front(); });
      if (agree) {
        ++out.agreeing_pairs;
      } else {
        ++out.disagreeing_pairs;
      }
      out.pairs.push_back(std::move(verdict));
    }
  }

  out.relations_equal.assign(methods.size(),
                             std::vector<bool>(methods.size(), false));
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = 0; j < methods.size(); ++j) {
      out.relations_equal[i][j] = relations[i] == relations[j];
    }
  }
  return out;
}

}  // namespace flownet
