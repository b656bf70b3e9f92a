#include "flownet/io.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "flownet/verify.hpp"

using namespace flownet;
using namespace flownet::testing;

TEST_SUITE("io") {

TEST_CASE("edges format parses and is the default") {
  const std::string text = "a,b,3\nb,a,1\n";
  const Network n = parse_network_text(text);
  CHECK(n.vertices().labels() == std::vector<std::string>{"a", "b"});
  CHECK(n.capacity(0, 1) == 3);
  CHECK(n.capacity(1, 0) == 1);
}

TEST_CASE("table format via header") {
  const std::string text =
      "#format: table\n"
      "a,2,0,b\n"
      "a,2,0,c\n"
      "b,5,0,c\n";
  CHECK(parse_network_text(text) == from_table(three_team_table()));
}

TEST_CASE("comments, blank lines and sorted labels") {
  const std::string text =
      "# a comment\n"
      "\n"
      "b,a,2\n"
      "a,b,1\n";
  const Network first_seen = parse_network_text(text);
  CHECK(first_seen.vertices().labels() ==
        std::vector<std::string>{"b", "a"});
  const Network sorted = parse_network_text(text, true);
  CHECK(sorted.vertices().labels() == std::vector<std::string>{"a", "b"});
  CHECK(sorted.capacity(0, 1) == 1);
}

TEST_CASE("duplicate edge lines aggregate") {
  const Network n = parse_network_text("a,b,1\na,b,2\n");
  CHECK(n.capacity(0, 1) == 3);
}

TEST_CASE("labels may be any comma-free utf-8 text") {
  const Network n = parse_network_text("héllo,wörld,3\nwörld,héllo,1\n");
  CHECK(n.vertices().labels() ==
        std::vector<std::string>{"héllo", "wörld"});
  CHECK(parse_network_text(serialize_edges(n)) == n);
  CHECK(error_code_of([] { VertexSet({"a,b", "c"}); }) ==
        errc::malformed_input);
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const std::string& text) -> std::string {
    try {
      parse_network_text(text);
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message_of("a,b,3\nc,d\n").find("line 2") != std::string::npos);
  CHECK(message_of("a,b,x\n").find("line 1") != std::string::npos);
  CHECK(message_of("a,a,3\nb,c,1\n").find("line 1") != std::string::npos);
  CHECK(error_code_of([] { parse_network_text("a,b,-1\n"); }) ==
        errc::parse_error);
  CHECK(error_code_of([] { parse_network_text(""); }) ==
        errc::domain_too_small);
  CHECK(error_code_of([] { parse_network_text("#format: json\n"); }) ==
        errc::parse_error);
}

TEST_CASE("serialization round-trips generated networks") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec spec;
    spec.n = 2 + static_cast<int>(seed % 5);
    spec.max_capacity = 6;
    spec.seed = seed;
    const Network n = generate(spec);
    CHECK(parse_network_text(serialize_edges(n)) == n);
  }
}

TEST_CASE("serialized text is canonical") {
  const std::string text = serialize_edges(from_table(three_team_table()));
  CHECK(text ==
        "#format: edges\n"
        "a,b,2\n"
        "a,c,2\n"
        "b,a,0\n"
        "b,c,5\n"
        "c,a,0\n"
        "c,b,0\n");
}

TEST_CASE("json round-trips") {
  const Network n = four_team_example();
  CHECK(network_from_json(network_to_json(n)) == n);

  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Relation r = random_relation(rng, 1 + static_cast<int>(i % 5));
    CHECK(relation_from_json(relation_to_json(r)) == r);
  }
}

}  // TEST_SUITE
