#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/network.hpp"
#include "flownet/relation.hpp"

namespace flownet {

enum class MethodId { flow, borda, dual_borda, schulze };

inline constexpr MethodId kAllMethods[] = {
    MethodId::flow, MethodId::borda, MethodId::dual_borda, MethodId::schulze};

const char* method_name(MethodId m);
std::optional<MethodId> parse_method(const std::string& name);

// Widest-path strengths: s(x,y) >= c(x,y), zero iff no path; satisfies the
// Gomory-Hu condition.
using StrengthMatrix = ScoreMatrix;

// The flow relation: x weakly above y iff the maximum flow value from x to y
// is at least the one from y to x. Always complete and quasi-transitive.
Relation flow_relation(const Network& n);

// Relations induced by outdegree and by negated indegree; both complete and
// transitive.
Relation borda_relation(const Network& n);
Relation dual_borda_relation(const Network& n);

// Maximin path strength for every ordered pair, via the triple-closure
// dynamic program (vertex repetition never helps maximin, so this matches
// the maximum over simple paths).
StrengthMatrix schulze_strength(const Network& n);

// Relation induced by the widest-path strengths; complete and
// quasi-transitive.
Relation schulze_relation(const Network& n);

Relation method_relation(MethodId m, const Network& n);

// The method's rule: all linear refinements of its relation.
LinearExtensionEnumerator rule(MethodId m, const Network& n);
std::vector<LinearOrder> rule_all(MethodId m, const Network& n,
                                  std::size_t cap = kDefaultEnumerationCap);
std::uint64_t rule_count(MethodId m, const Network& n);

// The method's k-winner solution: all k-maximum sets of its relation.
std::vector<std::vector<int>> solution(MethodId m, const Network& n, int k);

struct PairVerdict {
  int x = 0;
  int y = 0;
  std::vector<bool> member;  // one verdict per compared method
};

struct MethodComparison {
  std::vector<MethodId> methods;
  std::vector<PairVerdict> pairs;  // ordered pairs in canonical order
  int agreeing_pairs = 0;
  int disagreeing_pairs = 0;
  // relations_equal[i][j]: methods i and j produce identical relations.
  std::vector<std::vector<bool>> relations_equal;
};

// Membership verdict of each method per ordered pair, with an agreement
// summary. Needs at least two methods.
MethodComparison compare_methods(const Network& n,
                                 const std::vector<MethodId>& methods);

}  // namespace flownet
