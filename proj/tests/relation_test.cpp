#include "flownet/relation.hpp"

#include <algorithm>
#include <doctest.h>

#include "fixtures.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/methods.hpp"

using namespace flownet;
using namespace flownet::testing;

namespace {

std::vector<std::vector<int>> rankings_of(std::vector<LinearOrder> orders) {
  std::vector<std::vector<int>> out;
  for (auto& o : orders) out.push_back(o.ranking);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("strict, reversal and restriction") {
  const VertexSet v(default_labels(3));
  CHECK(strict(Relation::total(v)) == Relation::empty(v));

  Relation r = Relation::empty(v);
  r.set(0, 1, true);
  r.set(1, 1, true);
  CHECK(reverse_rel(reverse_rel(r)) == r);

  const Relation flow = flow_relation(four_team_example());
  const Relation s = strict(flow);
  // exactly a>b, c>b, d>b, c>d
  Relation expected = Relation::empty(flow.vertices());
  expected.set(0, 1, true);
  expected.set(2, 1, true);
  expected.set(3, 1, true);
  expected.set(2, 3, true);
  CHECK(s == expected);

  const Relation sub = restrict_to(flow, {0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.vertices().labels() == std::vector<std::string>{"a", "c"});
  CHECK(sub.tied(0, 1));  // a and c stay tied
  CHECK(error_code_of([&] { restrict_to(flow, {}); }) ==
        errc::invalid_restriction);
}

TEST_CASE("classification flags") {
  const VertexSet v(default_labels(3));
  const auto total = classify_relation(Relation::total(v));
  CHECK(total.complete);
  CHECK(total.reflexive);
  CHECK(total.quasi_transitive);
  CHECK(total.transitive);
  CHECK(!total.antisymmetric);
  CHECK(!total.acyclic);
  CHECK(total.quasi_acyclic);

  for (int n : {3, 4, 5}) {
    const auto flags = classify_relation(flow_relation(single_arc_network(n)));
    CHECK(flags.complete);
    CHECK(flags.quasi_transitive);
    CHECK(!flags.transitive);
  }

  const LinearOrder order{v, {2, 0, 1}};
  const auto linear = classify_relation(order.to_relation());
  CHECK(linear.complete);
  CHECK(linear.antisymmetric);
  CHECK(linear.transitive);
  CHECK(linear.quasi_transitive);
  CHECK(linear.quasi_acyclic);
  CHECK(linear.acyclic);
}

TEST_CASE("acyclicity follows the distinct-cycle definition") {
  const VertexSet v(default_labels(3));
  Relation chain = Relation::empty(v);
  chain.set(0, 1, true);
  chain.set(1, 2, true);
  CHECK(classify_relation(chain).acyclic);
  chain.set(2, 0, true);
  CHECK(!classify_relation(chain).acyclic);

  Relation tie = Relation::empty(v);
  tie.set(0, 1, true);
  tie.set(1, 0, true);
  CHECK(!classify_relation(tie).acyclic);   // a two-cycle
  CHECK(classify_relation(tie).quasi_acyclic);
}

TEST_CASE("score-induced relations") {
  const VertexSet v(default_labels(3));
  ScoreMatrix constant(v, 7);
  CHECK(relation_from_scores(constant) == Relation::total(v));

  const Network n = four_team_example();
  const Relation via_scores = relation_from_scores(flow_matrix(n));
  CHECK(via_scores == flow_relation(n));

  std::vector<std::int64_t> out_scores;
  for (int x = 0; x < n.size(); ++x) out_scores.push_back(n.outdegree(x));
  CHECK(relation_from_vertex_scores(n.vertices(), out_scores) ==
        borda_relation(n));
}

TEST_CASE("score triple condition") {
  CHECK(satisfies_gomory_hu_condition(flow_matrix(four_team_example())));
  CHECK(satisfies_gomory_hu_condition(
      schulze_strength(widest_path_contrast_example())));
  ScoreMatrix bad(VertexSet(default_labels(3)));
  bad.set(0, 1, 5);
  bad.set(1, 2, 5);
  bad.set(0, 2, 1);
  CHECK(!satisfies_gomory_hu_condition(bad));
}

TEST_CASE("linear extensions of the empty relation are all orders") {
  const Relation empty = Relation::empty(VertexSet(default_labels(3)));
  const auto all = linear_extensions_all(empty);
  CHECK(all.size() == 6);
  CHECK(count_linear_extensions(empty) == 6);
  // lexicographic enumeration order
  CHECK(all.front().ranking == std::vector<int>{0, 1, 2});
  CHECK(all.back().ranking == std::vector<int>{2, 1, 0});
}

TEST_CASE("a linear order extends only to itself") {
  const LinearOrder order{VertexSet(default_labels(4)), {3, 1, 0, 2}};
  const auto exts = linear_extensions_all(order.to_relation());
  REQUIRE(exts.size() == 1);
  CHECK(exts.front() == order);
  CHECK(count_linear_extensions(order.to_relation()) == 1);
}

TEST_CASE("relations with strict cycles have no extensions") {
  const VertexSet v(default_labels(3));
  Relation cycle = Relation::empty(v);
  cycle.set(0, 1, true);
  cycle.set(1, 2, true);
  cycle.set(2, 0, true);
  CHECK(linear_extensions_all(cycle).empty());
  CHECK(count_linear_extensions(cycle) == 0);
}

TEST_CASE("materializing past the cap raises enumeration-limit") {
  const Relation empty = Relation::empty(VertexSet(default_labels(4)));
  CHECK(error_code_of([&] { linear_extensions_all(empty, 10); }) ==
        errc::enumeration_limit);
  CHECK(linear_extensions_all(empty, 24).size() == 24);
}

TEST_CASE("extension forcing") {
  const VertexSet v(default_labels(3));
  const Relation empty = Relation::empty(v);
  const LinearOrder forced = linear_extension_forcing(empty, {{0, 1}});
  CHECK(forced.ranks_above(0, 1));

  CHECK(error_code_of([&] {
          linear_extension_forcing(empty, {{0, 1}, {1, 0}});
        }) == errc::infeasible_forcing);

  // Forcing a above c in the strict part of the four-team flow relation
  // pins the ranking a > c > d > b; cross-checked by filtering the full
  // enumeration.
  const Relation s = strict(flow_relation(four_team_example()));
  const LinearOrder pinned = linear_extension_forcing(s, {{0, 2}});
  std::vector<LinearOrder> filtered;
  for (const LinearOrder& l : linear_extensions_all(s)) {
    if (l.ranks_above(0, 2)) filtered.push_back(l);
  }
  REQUIRE(filtered.size() == 1);
  CHECK(pinned == filtered.front());
  CHECK(pinned.ranking == std::vector<int>{0, 2, 3, 1});
}

TEST_CASE("linear refinements of the four-team flow relation") {
  const Relation flow = flow_relation(four_team_example());
  const auto refinements = rankings_of(linear_refinements_all(flow));
  const std::vector<std::vector<int>> expected = {
      {0, 2, 3, 1},  // a c d b
      {2, 0, 3, 1},  // c a d b
      {2, 3, 0, 1},  // c d a b
  };
  CHECK(refinements == expected);
  CHECK(count_linear_refinements(flow) == 3);
}

TEST_CASE("refinements of the total relation and of a linear order") {
  const VertexSet v(default_labels(3));
  CHECK(linear_refinements_all(Relation::total(v)).size() == 6);
  const LinearOrder order{v, {1, 2, 0}};
  const auto only = linear_refinements_all(order.to_relation());
  REQUIRE(only.size() == 1);
  CHECK(only.front() == order);
}

TEST_CASE("linear refinements demand a complete quasi-acyclic relation") {
  const VertexSet v(default_labels(3));
  CHECK(error_code_of([&] {
          linear_refinements_all(Relation::empty(v));
        }) == errc::not_quasi_acyclic);
  Relation cyclic = Relation::total(v);
  cyclic.set(1, 0, false);
  cyclic.set(2, 1, false);
  cyclic.set(0, 2, false);  // strict 3-cycle a>b>c>a
  CHECK(error_code_of([&] { linear_refinements_all(cyclic); }) ==
        errc::not_quasi_acyclic);
}

TEST_CASE("k-maximum sets") {
  const Relation flow = flow_relation(four_team_example());
  CHECK(k_maximum_sets(flow, 1) ==
        std::vector<std::vector<int>>{{0}, {2}});  // {a}, {c}
  CHECK(k_maximum_sets(flow, 3) ==
        std::vector<std::vector<int>>{{0, 2, 3}});  // {a,c,d}

  const LinearOrder order{VertexSet(default_labels(4)), {2, 0, 3, 1}};
  const Relation lr = order.to_relation();
  for (int k = 1; k < 4; ++k) {
    const auto sets = k_maximum_sets(lr, k);
    REQUIRE(sets.size() == 1);
    CHECK(sets.front() == order.top(k));
  }

  const Relation total = Relation::total(VertexSet(default_labels(4)));
  CHECK(k_maximum_sets(total, 2).size() == 6);

  CHECK(error_code_of([&] { k_maximum_sets(total, 0); }) == errc::invalid_k);
  CHECK(error_code_of([&] { k_maximum_sets(total, 4); }) == errc::invalid_k);
}

TEST_CASE("maxima and minima") {
  const Relation flow = flow_relation(four_team_example());
  CHECK(maxima(flow) == std::vector<int>{0, 2});  // a and c
  CHECK(minima(flow) == std::vector<int>{1});     // b

  const VertexSet v(default_labels(3));
  CHECK(maxima(Relation::total(v)) == std::vector<int>{0, 1, 2});
  CHECK(minima(Relation::total(v)) == std::vector<int>{0, 1, 2});

  const LinearOrder order{v, {2, 0, 1}};
  CHECK(maxima(order.to_relation()) == std::vector<int>{2});
  CHECK(minima(order.to_relation()) == std::vector<int>{1});

  // single-vertex domains are allowed for relation operations
  const VertexSet solo({"x"});
  CHECK(maxima(Relation::total(solo)) == std::vector<int>{0});
  CHECK(count_linear_extensions(Relation::total(solo)) == 1);
}

}  // TEST_SUITE
