#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flownet/network.hpp"
#include "flownet/relation.hpp"
#include "flownet/rng.hpp"

namespace flownet {

enum class NetworkClassId {
  arbitrary,
  k_balanced,
  class_o,
  class_i,
  constant,
  pseudo_symmetric,
  parametric,
};

const char* class_name(NetworkClassId c);
std::optional<NetworkClassId> parse_class(const std::string& name);

// A seeded recipe for one random network of a structural class.
struct GeneratorSpec {
  NetworkClassId cls = NetworkClassId::arbitrary;
  int n = 4;
  std::int64_t max_capacity = 4;
  std::uint64_t seed = 1;
  std::int64_t balance = 1;          // k_balanced: opposite arcs sum to this
  std::int64_t value = 0;            // constant
  std::int64_t a = 0, b = 1, l = 0;  // parametric: c(x,y) = a w(x) + b w(y) + l
};

// Deterministic given the spec; the result passes classify for the declared
// class. Throws errc::invalid_spec on inconsistent parameters.
Network generate(const GeneratorSpec& spec);

// ---- agreement sufficiency checks -----------------------------------------

struct SufficiencyCheck {
  bool satisfied = false;
  // A triple sat exactly on the strict/non-strict boundary of the
  // feasibility inequality; reported because the boundary is treated as
  // failing.
  bool boundary_hit = false;
};

// Per-triple coefficient feasibility in closed form. When it holds, the flow
// relation equals the Borda relation (outdegree version) or the dual Borda
// relation (indegree version). Needs n >= 3.
SufficiencyCheck fb_sufficient_detail(const Network& n);
SufficiencyCheck fbhat_sufficient_detail(const Network& n);
bool fb_sufficient(const Network& n);
bool fbhat_sufficient(const Network& n);

// Independent route: searches candidate rational coefficients per triple and
// validates them with exact integer cross-multiplication.
bool fb_sufficient_search(const Network& n);
bool fbhat_sufficient_search(const Network& n);

// ---- test oracles ----------------------------------------------------------

// Minimum cut capacity over all 2^(n-2) admissible cuts.
std::int64_t min_cut_capacity_exhaustive(const Network& n, int s, int t);
// Maximin arc capacity over all simple paths from s to t; 0 if none.
std::int64_t widest_path_exhaustive(const Network& n, int s, int t);

// ---- random relations ------------------------------------------------------

Relation random_relation(Rng& rng, int n);
Relation random_reflexive_relation(Rng& rng, int n);
Relation random_complete_relation(Rng& rng, int n);
// Complete with acyclic strict part; rejection-sampled, falls back to a weak
// order.
Relation random_complete_quasi_acyclic(Rng& rng, int n);
// Complete and quasi-transitive: a random weak order with comparabilities
// between adjacent indifference classes randomly erased; the class predicate
// is re-checked and failures are resampled.
Relation random_complete_quasi_transitive(Rng& rng, int n);
LinearOrder random_linear_order(Rng& rng, int n);
std::vector<int> random_permutation(Rng& rng, int n);

// ---- property suite ---------------------------------------------------------

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  int min_n = 2;
  int max_n = 6;
  std::int64_t max_capacity = 4;
};

struct PropertyFailure {
  std::uint64_t seed = 0;
  std::string instance;   // replayable dump of the generated instance
  std::string assertion;  // the violated check
};

struct PropertyReport {
  std::string property;
  bool exploratory = false;
  std::size_t instances = 0;
  std::vector<PropertyFailure> failures;
  std::vector<std::string> notes;
};

// Per-instance harness handed to property bodies: seeded rng, bounds, an
// instance dump for failure reports, and the check primitive.
class PropertyContext {
 public:
  PropertyContext(const SuiteConfig& config, std::uint64_t instance_seed);

  Rng& rng() { return rng_; }
  const SuiteConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }

  // Bounds derived from the config.
  int pick_n(int lo, int hi);
  std::int64_t max_capacity() const { return config_.max_capacity; }

  void attach(const Network& n, const std::string& tag = "network");
  void attach_text(const std::string& tag, const std::string& text);
  void require(bool condition, const std::string& assertion);
  void note(const std::string& text);

  const std::string& instance_dump() const { return dump_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  const SuiteConfig& config_;
  std::uint64_t seed_;
  Rng rng_;
  std::string dump_;
  std::vector<std::string> notes_;
};

struct Property {
  std::string name;
  std::string summary;
  // Exploratory checks only record observations; they never fail the suite.
  bool exploratory = false;
  // Hidden checks must be requested by name; "all" skips them.
  bool hidden = false;
  std::function<void(PropertyContext&)> run;
};

// Every cataloged invariant, one named property each, individually
// invocable.
const std::vector<Property>& property_catalog();
const Property* find_property(const std::string& name);

PropertyReport run_property(const Property& property, const SuiteConfig& cfg);

// Runs the named properties ("all" or empty list: every non-hidden one).
// Throws errc::invalid_suite for unknown names.
std::vector<PropertyReport> run_suite(const std::vector<std::string>& names,
                                      const SuiteConfig& cfg);

bool suite_failed(const std::vector<PropertyReport>& reports);

}  // namespace flownet
