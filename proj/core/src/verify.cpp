#include "flownet/verify.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "flownet/error.hpp"
#include "flownet/io.hpp"
#include "flownet/methods.hpp"

namespace flownet {

const char* class_name(NetworkClassId c) {
  switch (c) {
    case NetworkClassId::arbitrary:
      return "arbitrary";
    case NetworkClassId::k_balanced:
      return "balanced";
    case NetworkClassId::class_o:
      return "class-o";
    case NetworkClassId::class_i:
      return "class-i";
    case NetworkClassId::constant:
      return "constant";
    case NetworkClassId::pseudo_symmetric:
      return "pseudo-symmetric";
    case NetworkClassId::parametric:
      return "parametric";
  }
  return "?";
}

std::optional<NetworkClassId> parse_class(const std::string& name) {
  for (NetworkClassId c :
       {NetworkClassId::arbitrary, NetworkClassId::k_balanced,
        NetworkClassId::class_o, NetworkClassId::class_i,
        NetworkClassId::constant, NetworkClassId::pseudo_symmetric,
        NetworkClassId::parametric}) {
    if (name == class_name(c)) return c;
  }
  return std::nullopt;
}

Network generate(const GeneratorSpec& spec) {
  if (spec.n < 2) {
    raise(errc::invalid_spec, "generator needs n >= 2");
  }
  if (spec.max_capacity < 0) {
    raise(errc::invalid_spec, "max capacity must be nonnegative");
  }
  const int n = spec.n;
  VertexSet vertices(default_labels(n));
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  auto at = [&caps, n](int x, int y) -> std::int64_t& {
    return caps[static_cast<std::size_t>(x) * n + y];
  };
  Rng rng(spec.seed);

  switch (spec.cls) {
    case NetworkClassId::arbitrary:
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x != y) at(x, y) = draw_int(rng, 0, spec.max_capacity);
        }
      }
      break;
    case NetworkClassId::k_balanced: {
      if (spec.balance < 0) {
        raise(errc::invalid_spec, "balance must be nonnegative");
      }
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          const std::int64_t c = draw_int(rng, 0, spec.balance);
          at(x, y) = c;
          at(y, x) = spec.balance - c;
        }
      }
      break;
    }
    case NetworkClassId::class_o: {
      for (int x = 0; x < n; ++x) {
        const std::int64_t w = draw_int(rng, 0, spec.max_capacity);
        for (int y = 0; y < n; ++y) {
          if (y != x) at(x, y) = w;
        }
      }
      break;
    }
    case NetworkClassId::class_i: {
      for (int y = 0; y < n; ++y) {
        const std::int64_t w = draw_int(rng, 0, spec.max_capacity);
        for (int x = 0; x < n; ++x) {
          if (x != y) at(x, y) = w;
        }
      }
      break;
    }
    case NetworkClassId::constant: {
      if (spec.value < 0 || spec.value > spec.max_capacity) {
        raise(errc::invalid_spec, "constant value must lie in [0, max-cap]");
      }
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x != y) at(x, y) = spec.value;
        }
      }
      break;
    }
    case NetworkClassId::pseudo_symmetric: {
      // A sum of directed cycles is circulation-like, so outdegree equals
      // indegree at every vertex.
      const std::int64_t cycles = draw_int(rng, 1, 3 * n);
      for (std::int64_t i = 0; i < cycles; ++i) {
        const int length = static_cast<int>(draw_int(rng, 2, n));
        std::vector<int> order = random_permutation(rng, n);
        order.resize(static_cast<std::size_t>(length));
        for (int j = 0; j < length; ++j) {
          at(order[j], order[(j + 1) % length]) += 1;
        }
      }
      break;
    }
    case NetworkClassId::parametric: {
      if (spec.a < 0 || spec.b < 0 || spec.l < 0 || spec.a + spec.b <= 0) {
        raise(errc::invalid_spec,
              "parametric class needs a,b,l >= 0 and a+b > 0");
      }
      std::vector<std::int64_t> omega(static_cast<std::size_t>(n));
      for (auto& w : omega) w = draw_int(rng, 0, spec.max_capacity);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x != y) at(x, y) = spec.a * omega[x] + spec.b * omega[y] + spec.l;
        }
      }
      break;
    }
  }
  return Network(std::move(vertices), std::move(caps));
}

// ---- sufficiency checks -----------------------------------------------------

namespace {

// Feasibility of one triple: does some coefficient q > -1/(n-2) satisfy
// lhs >= q * d? Closed form by sign of d.
bool triple_feasible(std::int64_t lhs, std::int64_t d, int n,
                     bool& boundary_hit) {
  if (d < 0) return true;
  if (d == 0) return lhs >= 0;
  const __int128 scaled = static_cast<__int128>(lhs) * (n - 2);
  if (scaled == -static_cast<__int128>(d)) {
    boundary_hit = true;
    return false;
  }
  return scaled > -static_cast<__int128>(d);
}

template <typename TripleFn>
SufficiencyCheck check_all_triples(const Network& net, TripleFn&& triple) {
  const int n = net.size();
  if (n < 3) {
    raise(errc::not_applicable, "sufficiency checks need n >= 3");
  }
  SufficiencyCheck out;
  out.satisfied = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int u = 0; u < n; ++u) {
        if (u == x || u == y) continue;
        const auto [lhs, d] = triple(x, y, u);
        if (!triple_feasible(lhs, d, n, out.boundary_hit)) {
          out.satisfied = false;
        }
      }
    }
  }
  return out;
}

// Exact comparison helpers on rationals p/q with q > 0.
bool rational_greater(std::int64_t p1, std::int64_t q1, std::int64_t p2,
                      std::int64_t q2) {
  return static_cast<__int128>(p1) * q2 > static_cast<__int128>(p2) * q1;
}

// lhs >= (p/q) * d with q > 0.
bool rational_bound_holds(std::int64_t lhs, std::int64_t p, std::int64_t q,
                          std::int64_t d) {
  return static_cast<__int128>(lhs) * q >= static_cast<__int128>(p) * d;
}

// Independent search route: try candidate witnesses 0, |lhs|+1 and lhs/d and
// validate each exactly.
template <typename TripleFn>
bool search_all_triples(const Network& net, TripleFn&& triple) {
  const int n = net.size();
  if (n < 3) {
    raise(errc::not_applicable, "sufficiency checks need n >= 3");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int u = 0; u < n; ++u) {
        if (u == x || u == y) continue;
        const auto [lhs, d] = triple(x, y, u);
        bool found = false;
        std::vector<std::pair<std::int64_t, std::int64_t>> candidates = {
            {0, 1},
            {(lhs < 0 ? -lhs : lhs) + 1, 1},
        };
        if (d != 0) {
          candidates.push_back(d > 0 ? std::make_pair(lhs, d)
                                     : std::make_pair(-lhs, -d));
        }
        for (const auto& [p, q] : candidates) {
          if (rational_greater(p, q, -1, n - 2) &&
              rational_bound_holds(lhs, p, q, d)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

SufficiencyCheck fb_sufficient_detail(const Network& net) {
  return check_all_triples(net, [&net](int x, int y, int u) {
    const std::int64_t lhs = net.capacity(y, u) - net.capacity(x, u) +
                             net.capacity(u, y) - net.capacity(u, x);
    const std::int64_t d = net.outdegree(x) - net.outdegree(y);
    return std::make_pair(lhs, d);
  });
}

SufficiencyCheck fbhat_sufficient_detail(const Network& net) {
  return check_all_triples(net, [&net](int x, int y, int u) {
    const std::int64_t lhs = net.capacity(x, u) - net.capacity(y, u) +
                             net.capacity(u, x) - net.capacity(u, y);
    const std::int64_t d = net.indegree(y) - net.indegree(x);
    return std::make_pair(lhs, d);
  });
}

bool fb_sufficient(const Network& net) {
  return fb_sufficient_detail(net).satisfied;
}

bool fbhat_sufficient(const Network& net) {
  return fbhat_sufficient_detail(net).satisfied;
}

bool fb_sufficient_search(const Network& net) {
  return search_all_triples(net, [&net](int x, int y, int u) {
    const std::int64_t lhs = net.capacity(y, u) - net.capacity(x, u) +
                             net.capacity(u, y) - net.capacity(u, x);
    const std::int64_t d = net.outdegree(x) - net.outdegree(y);
    return std::make_pair(lhs, d);
  });
}

bool fbhat_sufficient_search(const Network& net) {
  return search_all_triples(net, [&net](int x, int y, int u) {
    const std::int64_t lhs = net.capacity(x, u) - net.capacity(y, u) +
                             net.capacity(u, x) - net.capacity(u, y);
    const std::int64_t d = net.indegree(y) - net.indegree(x);
    return std::make_pair(lhs, d);
  });
}

// ---- test oracles ------------------------------------------------------------

std::int64_t min_cut_capacity_exhaustive(const Network& net, int s, int t) {
  const int n = net.size();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n) {
    raise(errc::invalid_pair, "source and sink must be distinct vertices");
  }
  if (n > 24) {
    raise(errc::oracle_too_large,
          "exhaustive cut enumeration supports at most 24 vertices");
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) rest.push_back(v);
  }
  std::int64_t best = -1;
  const std::uint32_t limit = std::uint32_t{1} << rest.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Cut cut;
    cut.side.push_back(s);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) cut.side.push_back(rest[i]);
    }
    std::sort(cut.side.begin(), cut.side.end());
    const std::int64_t c = cut_capacity(net, cut);
    if (best < 0 || c < best) best = c;
  }
  return best;
}

namespace {

void widest_path_search(const Network& net, int u, int t,
                        std::uint32_t visited, std::int64_t strength,
                        std::int64_t& best) {
  if (u == t) {
    best = std::max(best, strength);
    return;
  }
  for (int v = 0; v < net.size(); ++v) {
    const std::uint32_t bit = std::uint32_t{1} << v;
    if ((visited & bit) != 0 || net.capacity(u, v) < 1) continue;
    widest_path_search(net, v, t, visited | bit,
                       std::min(strength, net.capacity(u, v)), best);
  }
}

}  // namespace

std::int64_t widest_path_exhaustive(const Network& net, int s, int t) {
  const int n = net.size();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n) {
    raise(errc::invalid_pair, "source and sink must be distinct vertices");
  }
  if (n > 16) {
    raise(errc::oracle_too_large,
          "exhaustive path enumeration supports at most 16 vertices");
  }
  std::int64_t best = 0;
  widest_path_search(net, s, t, std::uint32_t{1} << s,
                     std::numeric_limits<std::int64_t>::max(), best);
  return best;
}

// ---- random relations ---------------------------------------------------------

Relation random_relation(Rng& rng, int n) {
  Relation out = Relation::empty(VertexSet(default_labels(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) {
        out.set(x, y, draw_u64(rng, 1) == 0);
      } else {
        out.set(x, y, draw_u64(rng, 2) == 0);
      }
    }
  }
  return out;
}

Relation random_reflexive_relation(Rng& rng, int n) {
  Relation out = random_relation(rng, n);
  if (draw_u64(rng, 7) == 0) {
    return Relation::total(out.vertices());
  }
  for (int x = 0; x < n; ++x) out.set(x, x, true);
  return out;
}

Relation random_complete_relation(Rng& rng, int n) {
  Relation out = Relation::empty(VertexSet(default_labels(n)));
  for (int x = 0; x < n; ++x) out.set(x, x, true);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      switch (draw_u64(rng, 2)) {
        case 0:
          out.set(x, y, true);
          break;
        case 1:
          out.set(y, x, true);
          break;
        default:
          out.set(x, y, true);
          out.set(y, x, true);
          break;
      }
    }
  }
  return out;
}

namespace {

Relation random_weak_order(Rng& rng, int n) {
  std::vector<std::int64_t> level(static_cast<std::size_t>(n));
  for (auto& v : level) v = draw_int(rng, 0, n - 1);
  return relation_from_vertex_scores(VertexSet(default_labels(n)), level);
}

}  // namespace

Relation random_complete_quasi_acyclic(Rng& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Relation r = random_complete_relation(rng, n);
    const RelationClassFlags f = classify_relation(r);
    if (f.complete && f.quasi_acyclic) return r;
  }
  return random_weak_order(rng, n);
}

Relation random_complete_quasi_transitive(Rng& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::int64_t> level(static_cast<std::size_t>(n));
    for (auto& v : level) v = draw_int(rng, 0, n - 1);
    Relation r =
        relation_from_vertex_scores(VertexSet(default_labels(n)), level);
    // Erase comparabilities between adjacent indifference classes: a strict
    // pair with no class strictly between becomes a tie.
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (level[x] <= level[y]) continue;
        bool adjacent = true;
        for (int z = 0; z < n; ++z) {
          if (level[z] > level[y] && level[z] < level[x]) {
            adjacent = false;
            break;
          }
        }
        if (adjacent && draw_u64(rng, 1) == 0) {
          r.set(y, x, true);
        }
      }
    }
    const RelationClassFlags f = classify_relation(r);
    if (f.complete && f.quasi_transitive) return r;
  }
  return random_weak_order(rng, n);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(draw_u64(rng, static_cast<std::uint64_t>(i)));
    std::swap(out[i], out[j]);
  }
  return out;
}

LinearOrder random_linear_order(Rng& rng, int n) {
  return LinearOrder{VertexSet(default_labels(n)), random_permutation(rng, n)};
}

// ---- property suite -------------------------------------------------------------

namespace {

// Instance failures abort the instance body; the runner turns them into
// report entries.
struct PropertyViolation {
  std::string assertion;
};

}  // namespace

PropertyContext::PropertyContext(const SuiteConfig& config,
                                 std::uint64_t instance_seed)
    : config_(config), seed_(instance_seed), rng_(instance_seed) {}

int PropertyContext::pick_n(int lo, int hi) {
  lo = std::max(lo, config_.min_n);
  hi = std::min(hi, config_.max_n);
  if (hi < lo) hi = lo;
  return static_cast<int>(draw_int(rng_, lo, hi));
}

void PropertyContext::attach(const Network& n, const std::string& tag) {
  attach_text(tag, serialize_edges(n));
}

void PropertyContext::attach_text(const std::string& tag,
                                  const std::string& text) {
  dump_ += "-- " + tag + "\n" + text;
  if (!text.empty() && text.back() != '\n') dump_ += '\n';
}

void PropertyContext::require(bool condition, const std::string& assertion) {
  if (!condition) throw PropertyViolation{assertion};
}

void PropertyContext::note(const std::string& text) {
  notes_.push_back(text);
}

const Property* find_property(const std::string& name) {
  for (const Property& p : property_catalog()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

PropertyReport run_property(const Property& property, const SuiteConfig& cfg) {
  PropertyReport report;
  report.property = property.name;
  report.exploratory = property.exploratory;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t instance_seed =
        (i == 0) ? cfg.seed : mix_seed(cfg.seed, i);
    PropertyContext ctx(cfg, instance_seed);
    ++report.instances;
    try {
      property.run(ctx);
    } catch (const PropertyViolation& violation) {
      if (property.exploratory) {
        report.notes.push_back("seed " + std::to_string(instance_seed) +
                               ": " + violation.assertion);
      } else {
        report.failures.push_back(
            {instance_seed, ctx.instance_dump(), violation.assertion});
      }
    } catch (const Error& err) {
      report.failures.push_back({instance_seed, ctx.instance_dump(),
                                 std::string("unexpected error: ") +
                                     err.what()});
    }
    for (const std::string& note : ctx.notes()) {
      report.notes.push_back(note);
    }
  }
  return report;
}

std::vector<PropertyReport> run_suite(const std::vector<std::string>& names,
                                      const SuiteConfig& cfg) {
  if (cfg.count < 1) {
    raise(errc::invalid_suite, "count must be at least 1");
  }
  std::vector<const Property*> selected;
  const bool all =
      names.empty() || (names.size() == 1 && names.front() == "all");
  if (all) {
    for (const Property& p : property_catalog()) {
      if (!p.hidden) selected.push_back(&p);
    }
  } else {
    for (const std::string& name : names) {
      const Property* p = find_property(name);
      if (p == nullptr) {
        raise(errc::invalid_suite, "unknown property: " + name);
      }
      selected.push_back(p);
    }
  }
  std::vector<PropertyReport> reports;
  reports.reserve(selected.size());
  for (const Property* p : selected) {
    reports.push_back(run_property(*p, cfg));
  }
  return reports;
}

bool suite_failed(const std::vector<PropertyReport>& reports) {
  for (const PropertyReport& r : reports) {
    if (!r.exploratory && !r.failures.empty()) return true;
  }
  return false;
}

}  // namespace flownet
