#include "flownet/maxflow.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "flownet/verify.hpp"

using namespace flownet;
using namespace flownet::testing;

namespace {

// The twelve all-pairs values of the four-team example, row-major.
constexpr std::int64_t kFourTeamFlows[4][4] = {
    {0, 4, 4, 4},
    {2, 0, 2, 2},
    {4, 4, 0, 5},
    {4, 4, 4, 0},
};

}  // namespace

TEST_SUITE("maxflow") {

TEST_CASE("four-team golden flow values") {
  const Network n = four_team_example();
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x != y) {
        CHECK(max_flow_value(n, x, y) == kFourTeamFlows[x][y]);
      }
    }
  }
}

TEST_CASE("flow value of an isolated source is zero") {
  const Network n = single_arc_network(3);
  CHECK(max_flow_value(n, 2, 0) == 0);
  CHECK(max_flow_value(n, 1, 0) == 0);
  CHECK(error_code_of([&] { max_flow_value(n, 1, 1); }) == errc::invalid_pair);
}

TEST_CASE("witness flows") {
  const Network zero = zero_network(3);
  const Flow null_flow = max_flow_witness(zero, 0, 1);
  CHECK(null_flow.value == 0);
  for (std::int64_t v : null_flow.values) CHECK(v == 0);

  const Network single = make_network({"x", "y"}, {{"x", "y", 7}});
  const Flow direct = max_flow_witness(single, 0, 1);
  CHECK(direct.value == 7);
  CHECK(direct.at(0, 1, 2) == 7);
  CHECK(direct.at(1, 0, 2) == 0);

  const Network n = four_team_example();
  const Flow f = max_flow_witness(n, 0, 1);
  CHECK(f.value == 4);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x == y) continue;
      CHECK(f.at(x, y, 4) >= 0);
      CHECK(f.at(x, y, 4) <= n.capacity(x, y));
    }
    if (x != 0) CHECK(f.at(x, 0, 4) == 0);  // nothing enters the source
  }
  for (int v = 2; v < 4; ++v) {
    std::int64_t in = 0, out = 0;
    for (int u = 0; u < 4; ++u) {
      if (u == v) continue;
      in += f.at(u, v, 4);
      out += f.at(v, u, 4);
    }
    CHECK(in == out);
  }
}

TEST_CASE("min cut witnesses meet the flow value") {
  const Network n = four_team_example();
  const Cut ba = min_cut(n, 1, 0);
  CHECK(cut_capacity(n, ba) == 2);
  const Cut cd = min_cut(n, 2, 3);
  CHECK(cut_capacity(n, cd) == 5);

  const Network isolated = single_arc_network(3);
  const Cut trivial = min_cut(isolated, 2, 0);
  CHECK(cut_capacity(isolated, trivial) == 0);
}

TEST_CASE("cut capacities") {
  const Network n = four_team_example();
  CHECK(cut_capacity(n, Cut{{0}}) == n.outdegree(0));
  CHECK(cut_capacity(n, Cut{{0, 1, 2}}) == n.indegree(3));
  CHECK(cut_capacity(n, Cut{{0, 2}}) == 7);  // a,c against b,d
  CHECK(error_code_of([&] { cut_capacity(n, Cut{{}}); }) == errc::invalid_cut);
  CHECK(error_code_of([&] {
          cut_capacity(n, Cut{{0, 1, 2, 3}});
        }) == errc::invalid_cut);
}

TEST_CASE("flow matrix matches pairwise values and transposes under reversal") {
  const Network n = four_team_example();
  const FlowMatrix m = flow_matrix(n);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x != y) CHECK(m.at(x, y) == kFourTeamFlows[x][y]);
    }
  }
  const FlowMatrix r = flow_matrix(reverse(n));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x != y) CHECK(r.at(y, x) == m.at(x, y));
    }
  }
  const FlowMatrix z = flow_matrix(zero_network(3));
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(z.at(x, y) == 0);
    }
  }
}

TEST_CASE("path-packing oracle agrees on the worked example") {
  const Network n = four_team_example();
  const OracleGuard wide{4, 32};
  CHECK(lambda_oracle(n, 0, 1, wide) == 4);
  CHECK(lambda_oracle(n, 1, 0, wide) == 2);
  CHECK(lambda_oracle(n, 2, 3, wide) == 5);
  CHECK(lambda_oracle(single_arc_network(3), 2, 1, {3, 12}) == 0);
  CHECK(error_code_of([&] { lambda_oracle(n, 0, 1); }) ==
        errc::oracle_too_large);
  CHECK(error_code_of([&] { lambda_oracle(n, 0, 0, wide); }) ==
        errc::invalid_pair);
}

TEST_CASE("triple inequality check") {
  CHECK(check_gomory_hu(flow_matrix(four_team_example())));
  CHECK(check_gomory_hu(FlowMatrix(VertexSet(default_labels(4)))));
  FlowMatrix bad(VertexSet(default_labels(3)));
  bad.set(0, 1, 5);
  bad.set(1, 2, 5);
  bad.set(0, 2, 1);
  CHECK(!check_gomory_hu(bad));
}

TEST_CASE("exhaustive cut oracle agrees on the fixtures") {
  for (const Network& n : {four_team_example(), margin_example(),
                           widest_path_contrast_example(), single_arc_network(4)}) {
    for (int s = 0; s < n.size(); ++s) {
      for (int t = 0; t < n.size(); ++t) {
        if (s != t) {
          CHECK(max_flow_value(n, s, t) ==
                min_cut_capacity_exhaustive(n, s, t));
        }
      }
    }
  }
}

}  // TEST_SUITE
