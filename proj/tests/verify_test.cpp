#include "flownet/verify.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/methods.hpp"

using namespace flownet;
using namespace flownet::testing;

TEST_SUITE("verify") {

TEST_CASE("constant generator with value zero gives the zero network") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::constant;
  spec.n = 3;
  spec.value = 0;
  CHECK(generate(spec) == zero_network(3));
}

TEST_CASE("balanced generator with balance one is tournament-like") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::k_balanced;
  spec.n = 4;
  spec.balance = 1;
  spec.seed = 5;
  const Network n = generate(spec);
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      CHECK(n.capacity(x, y) + n.capacity(y, x) == 1);
    }
  }
}

TEST_CASE("pseudo-symmetric generator passes classify") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    GeneratorSpec spec;
    spec.cls = NetworkClassId::pseudo_symmetric;
    spec.n = 4;
    spec.seed = seed;
    CHECK(classify(generate(spec)).pseudo_symmetric);
  }
}

TEST_CASE("generator soundness at scale") {
  Rng seeds(2024);
  for (int i = 0; i < 10000; ++i) {
    GeneratorSpec spec;
    spec.n = 2 + static_cast<int>(i % 5);
    spec.max_capacity = 4;
    spec.seed = seeds();
    spec.balance = static_cast<std::int64_t>(i % 5);
    spec.value = static_cast<std::int64_t>(i % 5) % (spec.max_capacity + 1);

    spec.cls = NetworkClassId::k_balanced;
    const auto balanced = classify(generate(spec));
    REQUIRE(balanced.balanced());
    REQUIRE(*balanced.balance == spec.balance);

    spec.cls = NetworkClassId::class_o;
    REQUIRE(classify(generate(spec)).out_weight.has_value());

    spec.cls = NetworkClassId::class_i;
    REQUIRE(classify(generate(spec)).in_weight.has_value());

    spec.cls = NetworkClassId::constant;
    REQUIRE(classify(generate(spec)).constant);

    spec.cls = NetworkClassId::pseudo_symmetric;
    REQUIRE(classify(generate(spec)).pseudo_symmetric);
  }
}

TEST_CASE("generator determinism and validation") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::arbitrary;
  spec.n = 5;
  spec.max_capacity = 9;
  spec.seed = 77;
  CHECK(generate(spec) == generate(spec));

  spec.n = 1;
  CHECK(error_code_of([&] { generate(spec); }) == errc::invalid_spec);
  spec.n = 3;
  spec.cls = NetworkClassId::constant;
  spec.value = 99;
  spec.max_capacity = 4;
  CHECK(error_code_of([&] { generate(spec); }) == errc::invalid_spec);
  spec.cls = NetworkClassId::parametric;
  spec.value = 0;
  spec.a = 0;
  spec.b = 0;
  CHECK(error_code_of([&] { generate(spec); }) == errc::invalid_spec);
}

TEST_CASE("sufficiency holds on balanced networks via both routes") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::k_balanced;
  spec.n = 4;
  spec.balance = 3;
  for (std::uint64_t seed : {1, 2, 3}) {
    spec.seed = seed;
    const Network n = generate(spec);
    CHECK(fb_sufficient(n));
    CHECK(fb_sufficient_search(n));
    CHECK(fbhat_sufficient(n));
    CHECK(fbhat_sufficient_search(n));
  }
}

TEST_CASE("sufficiency holds on lopsided parametric networks") {
  GeneratorSpec spec;
  spec.cls = NetworkClassId::parametric;
  spec.n = 4;
  spec.a = 1;
  spec.b = 4;  // (n-1)a < b
  spec.l = 2;
  spec.max_capacity = 3;
  spec.seed = 9;
  const Network n = generate(spec);
  CHECK(fb_sufficient(n));
  CHECK(fb_sufficient_search(n));
  CHECK(flow_relation(n) == borda_relation(n));
}

TEST_CASE("sufficiency fails where flow and win counting disagree") {
  // The four-team flow relation is not transitive, so it cannot equal any
  // score-induced order; the sufficiency condition must reject it.
  const Network n = four_team_example();
  CHECK(flow_relation(n) != borda_relation(n));
  CHECK(!fb_sufficient(n));
  CHECK(!fb_sufficient_search(n));
  CHECK(error_code_of([] {
          fb_sufficient(zero_network(2));
        }) == errc::not_applicable);
}

TEST_CASE("exhaustive oracles match the fast routes on fixtures") {
  const Network n = four_team_example();
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      if (s == t) continue;
      CHECK(min_cut_capacity_exhaustive(n, s, t) == max_flow_value(n, s, t));
      CHECK(widest_path_exhaustive(n, s, t) == schulze_strength(n).at(s, t));
    }
  }
}

TEST_CASE("relation samplers produce their classes") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const int n = static_cast<int>(draw_int(rng, 1, 5));
    const auto qa = classify_relation(random_complete_quasi_acyclic(rng, n));
    CHECK(qa.complete);
    CHECK(qa.quasi_acyclic);
    const auto qt = classify_relation(random_complete_quasi_transitive(rng, n));
    CHECK(qt.complete);
    CHECK(qt.quasi_transitive);
  }
}

TEST_CASE("suite runner validates names and counts") {
  SuiteConfig cfg;
  cfg.count = 2;
  CHECK(error_code_of([&] { run_suite({"no-such-prop"}, cfg); }) ==
        errc::invalid_suite);
  cfg.count = 0;
  CHECK(error_code_of([&] { run_suite({"gomory-hu-triple"}, cfg); }) ==
        errc::invalid_suite);
}

TEST_CASE("a small clean run passes") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.count = 25;
  const auto reports = run_suite(
      {"gomory-hu-triple", "quasi-transitivity", "reversal-transpose"}, cfg);
  CHECK(!suite_failed(reports));
  for (const auto& r : reports) {
    CHECK(r.instances == 25);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("the negated self-test fails with a replayable seed") {
  SuiteConfig cfg;
  cfg.seed = 3;
  cfg.count = 5;
  const auto reports = run_suite({"self-test-failure"}, cfg);
  REQUIRE(reports.size() == 1);
  CHECK(suite_failed(reports));
  REQUIRE(!reports.front().failures.empty());
  const PropertyFailure& failure = reports.front().failures.front();
  CHECK(!failure.instance.empty());

  SuiteConfig replay;
  replay.seed = failure.seed;
  replay.count = 1;
  const auto replayed = run_suite({"self-test-failure"}, replay);
  REQUIRE(replayed.front().failures.size() == 1);
  CHECK(replayed.front().failures.front().assertion == failure.assertion);
  CHECK(replayed.front().failures.front().instance == failure.instance);
}

TEST_CASE("self-test is hidden from the full suite") {
  const Property* hidden = find_property("self-test-failure");
  REQUIRE(hidden != nullptr);
  CHECK(hidden->hidden);
  SuiteConfig cfg;
  cfg.count = 1;
  for (const auto& report : run_suite({}, cfg)) {
    CHECK(report.property != "self-test-failure");
  }
}

TEST_CASE("exploratory checks never fail the suite") {
  SuiteConfig cfg;
  cfg.count = 30;
  cfg.seed = 123;
  const auto reports = run_suite(
      {"schulze-dominance-exploratory", "schulze-improvement-exploratory"},
      cfg);
  CHECK(!suite_failed(reports));
  for (const auto& r : reports) {
    CHECK(r.exploratory);
    CHECK(r.failures.empty());
  }
}

}  // TEST_SUITE
