#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "flownet/error.hpp"
#include "flownet/network.hpp"

namespace flownet::testing {

inline Network make_network(
    const std::vector<std::string>& labels,
    const std::vector<std::tuple<std::string, std::string, std::int64_t>>&
        arcs) {
  VertexSet vertices(labels);
  const int n = vertices.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [from, to, c] : arcs) {
    caps[static_cast<std::size_t>(vertices.index_of(from)) * n +
         vertices.index_of(to)] = c;
  }
  return Network(std::move(vertices), std::move(caps));
}

// Four teams, seventeen matches; the flow relation has two winners and
// three consistent rankings.
inline Network four_team_example() {
  return make_network({"a", "b", "c", "d"},
                      {{"a", "b", 1},
                       {"b", "a", 0},
                       {"a", "c", 1},
                       {"c", "a", 2},
                       {"a", "d", 2},
                       {"d", "a", 2},
                       {"b", "c", 1},
                       {"c", "b", 2},
                       {"b", "d", 1},
                       {"d", "b", 1},
                       {"c", "d", 2},
                       {"d", "c", 2}});
}

inline CompetitionTable four_team_table() {
  return CompetitionTable{{{"a", 1, 0, "b"},
                           {"a", 1, 2, "c"},
                           {"a", 2, 2, "d"},
                           {"b", 1, 2, "c"},
                           {"b", 1, 1, "d"},
                           {"c", 2, 2, "d"}}};
}

// Three teams with uneven schedules: counting wins crowns b, the flow
// relation ranks a first.
inline CompetitionTable three_team_table() {
  return CompetitionTable{{{"a", 2, 0, "b"}, {"a", 2, 0, "c"}, {"b", 5, 0, "c"}}};
}

// Three teams whose widest-path strengths are constant while the flow
// relation is the linear order c > a > b.
inline Network widest_path_contrast_example() {
  return make_network({"a", "b", "c"},
                      {{"a", "b", 1},
                       {"b", "a", 1},
                       {"a", "c", 1},
                       {"c", "a", 1},
                       {"b", "c", 0},
                       {"c", "b", 1}});
}

// Acyclic four-vertex network used for the margin-function golden values;
// d never wins a single match.
inline Network margin_example() {
  return make_network({"a", "b", "c", "d"},
                      {{"a", "b", 2},
                       {"a", "c", 2},
                       {"a", "d", 1},
                       {"b", "c", 2},
                       {"b", "d", 1},
                       {"c", "d", 1}});
}

// One arc of capacity one, all other arcs zero.
inline Network single_arc_network(int n) {
  VertexSet vertices(default_labels(n));
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  caps[1] = 1;  // arc (0, 1)
  return Network(std::move(vertices), std::move(caps));
}

inline Network zero_network(int n) {
  return Network::zero(VertexSet(default_labels(n)));
}

template <typename Fn>
std::optional<errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace flownet::testing
