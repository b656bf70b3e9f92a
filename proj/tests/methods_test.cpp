#include "flownet/methods.hpp"

#include <algorithm>
#include <doctest.h>

#include "fixtures.hpp"
#include "flownet/verify.hpp"

using namespace flownet;
using namespace flownet::testing;

TEST_SUITE("methods") {

TEST_CASE("four-team flow relation membership") {
  const Relation r = flow_relation(four_team_example());
  const int a = 0, b = 1, c = 2, d = 3;
  Relation expected = Relation::empty(r.vertices());
  for (int v = 0; v < 4; ++v) expected.set(v, v, true);
  expected.set(a, b, true);
  expected.set(a, c, true);
  expected.set(c, a, true);
  expected.set(a, d, true);
  expected.set(d, a, true);
  expected.set(c, b, true);
  expected.set(d, b, true);
  expected.set(c, d, true);
  CHECK(r == expected);
}

TEST_CASE("uneven-schedule example: flow ranks a first, win counting ranks b") {
  const Network n = from_table(three_team_table());
  const Relation flow = flow_relation(n);
  const LinearOrder abc{n.vertices(), {0, 1, 2}};
  CHECK(flow == abc.to_relation());

  CHECK(n.outdegree(0) == 4);
  CHECK(n.outdegree(1) == 5);
  CHECK(n.outdegree(2) == 0);
  const Relation borda = borda_relation(n);
  const LinearOrder bac{n.vertices(), {1, 0, 2}};
  CHECK(borda == bac.to_relation());
  CHECK(maxima(borda) == std::vector<int>{1});
}

TEST_CASE("flat methods on degenerate networks") {
  const Network zero = zero_network(3);
  CHECK(flow_relation(zero) == Relation::total(zero.vertices()));
  CHECK(borda_relation(zero) == Relation::total(zero.vertices()));
  CHECK(dual_borda_relation(zero) == Relation::total(zero.vertices()));
  CHECK(schulze_relation(zero) == Relation::total(zero.vertices()));
}

TEST_CASE("widest-path strengths") {
  const Network contrast = widest_path_contrast_example();
  const StrengthMatrix s = schulze_strength(contrast);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != y) CHECK(s.at(x, y) == 1);
    }
  }

  const Network single = make_network({"x", "y"}, {{"x", "y", 9}});
  const StrengthMatrix ss = schulze_strength(single);
  CHECK(ss.at(0, 1) == 9);
  CHECK(ss.at(1, 0) == 0);

  // a-d-c-b carries min(2,2,2) = 2, better than the direct arc of 1
  const StrengthMatrix sc = schulze_strength(four_team_example());
  CHECK(sc.at(0, 1) == 2);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x != y) {
        CHECK(sc.at(x, y) ==
              widest_path_exhaustive(four_team_example(), x, y));
      }
    }
  }
}

TEST_CASE("contrast example: widest-path is flat, flow is a linear order") {
  const Network n = widest_path_contrast_example();
  CHECK(schulze_relation(n) == Relation::total(n.vertices()));

  const FlowMatrix m = flow_matrix(n);
  CHECK(m.at(0, 1) == 2);  // a,b
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(0, 2) == 1);  // a,c
  CHECK(m.at(2, 0) == 2);
  CHECK(m.at(1, 2) == 1);  // b,c
  CHECK(m.at(2, 1) == 2);
  const LinearOrder cab{n.vertices(), {2, 0, 1}};
  CHECK(flow_relation(n) == cab.to_relation());

  const auto flow_rankings = rule_all(MethodId::flow, n);
  REQUIRE(flow_rankings.size() == 1);
  CHECK(flow_rankings.front() == cab);

  CHECK(solution(MethodId::flow, n, 1) ==
        std::vector<std::vector<int>>{{2}});
  CHECK(solution(MethodId::schulze, n, 1) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(solution(MethodId::flow, n, 2) ==
        std::vector<std::vector<int>>{{0, 2}});
  CHECK(rule_count(MethodId::schulze, n) == 6);
}

TEST_CASE("single-arc network: one strict pair, everything else tied") {
  const Network n = single_arc_network(3);
  const Relation s = schulze_relation(n);
  CHECK(s.strictly(0, 1));
  CHECK(s.tied(0, 2));
  CHECK(s.tied(1, 2));
}

TEST_CASE("four-team rule and solutions") {
  const Network n = four_team_example();
  const auto rankings = rule_all(MethodId::flow, n);
  REQUIRE(rankings.size() == 3);
  CHECK(rankings[0].ranking == std::vector<int>{0, 2, 3, 1});
  CHECK(rankings[1].ranking == std::vector<int>{2, 0, 3, 1});
  CHECK(rankings[2].ranking == std::vector<int>{2, 3, 0, 1});

  CHECK(solution(MethodId::flow, n, 1) ==
        std::vector<std::vector<int>>{{0}, {2}});
  CHECK(solution(MethodId::flow, n, 3) ==
        std::vector<std::vector<int>>{{0, 2, 3}});
}

TEST_CASE("the acyclic margin example never selects d") {
  const Network n = margin_example();
  for (const auto& w : solution(MethodId::flow, n, 1)) {
    CHECK(w != std::vector<int>{3});
  }
}

TEST_CASE("rule on a flat network counts all orders") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::pseudo_symmetric;
  spec.n = 4;
  spec.seed = 11;
  const Network n = generate(spec);
  CHECK(flow_relation(n).has_empty_strict_part());
  CHECK(rule_count(MethodId::flow, n) == 24);
}

TEST_CASE("method comparison") {
  const Network contrast = widest_path_contrast_example();
  const auto report = compare_methods(
      contrast, {MethodId::flow, MethodId::schulze});
  CHECK(report.agreeing_pairs == 3);
  CHECK(report.disagreeing_pairs == 3);
  CHECK(!report.relations_equal[0][1]);

  const Network zero = zero_network(3);
  const auto flat = compare_methods(
      zero, {MethodId::flow, MethodId::borda, MethodId::dual_borda,
             MethodId::schulze});
  CHECK(flat.disagreeing_pairs == 0);
  for (const auto& row : flat.relations_equal) {
    for (bool eq : row) CHECK(eq);
  }

  CHECK(error_code_of([&] { compare_methods(zero, {MethodId::flow}); }) ==
        errc::invalid_spec);
}

TEST_CASE("method names parse and print") {
  for (MethodId m : kAllMethods) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK(!parse_method("condorcet").has_value());
}

}  // TEST_SUITE
