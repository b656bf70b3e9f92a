// Command-line front end: ingest competition tables or edge lists, emit
// relations, rankings, winner sets and flow matrices, compare methods, run
// the verification suites and generate class networks.
//
// Exit codes: 0 success, 1 property counterexample, 2 input/usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flownet/error.hpp"
#include "flownet/io.hpp"
#include "flownet/maxflow.hpp"
#include "flownet/methods.hpp"
#include "flownet/network.hpp"
#include "flownet/relation.hpp"
#include "flownet/verify.hpp"

namespace {

using nlohmann::json;
using namespace flownet;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "tsv";
  bool sort_labels = false;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(errc::parse_error, "cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Network load_network(const std::string& path, const Options& opt) {
  return parse_network_text(slurp(path), opt.sort_labels);
}

void emit(const Options& opt, const std::string& tsv, const json& tree) {
  if (opt.format == "tree") {
    std::cout << tree.dump(2) << "\n";
  } else {
    std::cout << tsv;
  }
}

std::string join_labels(const Network& n, const std::vector<int>& vertices,
                        const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += separator;
    out += n.vertices().label(vertices[i]);
  }
  return out;
}

json matrix_rows(const ScoreMatrix& m) {
  json rows = json::array();
  for (int x = 0; x < m.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < m.size(); ++y) row.push_back(m.at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_matrix(const std::string& input, bool with_schulze, bool with_oracle,
               int oracle_max_n, std::int64_t oracle_max_cap,
               const Options& opt) {
  const Network n = load_network(input, opt);
  const FlowMatrix phi = flow_matrix(n);
  std::optional<StrengthMatrix> strength;
  if (with_schulze) strength = schulze_strength(n);

  int oracle_pairs = 0;
  if (with_oracle) {
    const OracleGuard guard{oracle_max_n, oracle_max_cap};
    for (int x = 0; x < n.size(); ++x) {
      for (int y = 0; y < n.size(); ++y) {
        if (x == y) continue;
        ++oracle_pairs;
        if (lambda_oracle(n, x, y, guard) != phi.at(x, y)) {
          std::cerr << "counterexample: path packing disagrees with the flow "
                       "value on "
                    << n.vertices().label(x) << "," << n.vertices().label(y)
                    << "\n";
          return kExitCounterexample;
        }
      }
    }
  }

  std::string tsv;
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x == y) continue;
      tsv += n.vertices().label(x);
      tsv += '\t';
      tsv += n.vertices().label(y);
      tsv += '\t';
      tsv += std::to_string(phi.at(x, y));
      if (strength) {
        tsv += '\t';
        tsv += std::to_string(strength->at(x, y));
      }
      tsv += '\n';
    }
  }
  json tree{{"vertices", n.vertices().labels()}, {"phi", matrix_rows(phi)}};
  if (strength) tree["strength"] = matrix_rows(*strength);
  if (with_oracle) {
    tsv += "# oracle: ok (" + std::to_string(oracle_pairs) + " pairs)\n";
    tree["oracle"] = "ok";
  }
  emit(opt, tsv, tree);
  return kExitOk;
}

int run_rank(const std::string& input, const std::string& method_name,
             std::size_t limit, const Options& opt) {
  const Network n = load_network(input, opt);
  const MethodId method = *parse_method(method_name);
  const Relation r = method_relation(method, n);

  std::string tsv;
  json strict_pairs = json::array();
  json tie_pairs = json::array();
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x != y && r.strictly(x, y)) {
        tsv += "strict\t" + n.vertices().label(x) + "\t" +
               n.vertices().label(y) + "\n";
        strict_pairs.push_back({n.vertices().label(x), n.vertices().label(y)});
      }
    }
  }
  for (int x = 0; x < n.size(); ++x) {
    for (int y = x + 1; y < n.size(); ++y) {
      if (r.tied(x, y)) {
        tsv += "tie\t" + n.vertices().label(x) + "\t" +
               n.vertices().label(y) + "\n";
        tie_pairs.push_back({n.vertices().label(x), n.vertices().label(y)});
      }
    }
  }

  // Exact count first (symbolically n! when the relation is flat), then up
  // to `limit` refinements.
  json count_json;
  std::string count_text;
  if (r.has_empty_strict_part()) {
    count_text = std::to_string(n.size()) + "!";
    count_json = count_text;
  } else {
    const std::uint64_t count = count_linear_refinements(r);
    count_text = std::to_string(count);
    count_json = count;
  }
  tsv += "refinement_count\t" + count_text + "\n";

  json refinements = json::array();
  bool truncated = false;
  LinearExtensionEnumerator enumerator = linear_refinements(r);
  std::size_t produced = 0;
  while (auto order = enumerator.next()) {
    if (produced == limit) {
      truncated = true;
      break;
    }
    ++produced;
    tsv += "refinement\t" + join_labels(n, order->ranking, ">") + "\n";
    json labels = json::array();
    for (int v : order->ranking) labels.push_back(n.vertices().label(v));
    refinements.push_back(std::move(labels));
  }
  if (truncated) tsv += "truncated\t1\n";

  emit(opt, tsv,
       json{{"vertices", n.vertices().labels()},
            {"relation", relation_to_json(r)},
            {"strict", strict_pairs},
            {"ties", tie_pairs},
            {"refinement_count", count_json},
            {"refinements", refinements},
            {"truncated", truncated}});
  return kExitOk;
}

int run_winners(const std::string& input, const std::string& method_name,
                int k, const Options& opt) {
  const Network n = load_network(input, opt);
  const MethodId method = *parse_method(method_name);
  const auto sets = solution(method, n, k);

  std::string tsv;
  json sets_json = json::array();
  for (const auto& w : sets) {
    tsv += "winners\t" + join_labels(n, w, ",") + "\n";
    json labels = json::array();
    for (int v : w) labels.push_back(n.vertices().label(v));
    sets_json.push_back(std::move(labels));
  }
  emit(opt, tsv,
       json{{"vertices", n.vertices().labels()},
            {"k", k},
            {"winner_sets", sets_json}});
  return kExitOk;
}

int run_compare(const std::string& input,
                const std::vector<std::string>& method_names,
                const Options& opt) {
  const Network n = load_network(input, opt);
  std::vector<MethodId> methods;
  for (const std::string& name : method_names) {
    methods.push_back(*parse_method(name));
  }
  const MethodComparison report = compare_methods(n, methods);

  std::string tsv = "methods";
  for (MethodId m : methods) tsv += std::string("\t") + method_name(m);
  tsv += '\n';
  json pairs = json::array();
  for (const PairVerdict& v : report.pairs) {
    tsv += "pair\t" + n.vertices().label(v.x) + "\t" + n.vertices().label(v.y);
    json pair{{"x", n.vertices().label(v.x)}, {"y", n.vertices().label(v.y)}};
    for (std::size_t i = 0; i < methods.size(); ++i) {
      tsv += v.member[i] ? "\t1" : "\t0";
      pair[method_name(methods[i])] = static_cast<bool>(v.member[i]);
    }
    tsv += '\n';
    pairs.push_back(std::move(pair));
  }
  tsv += "agree\t" + std::to_string(report.agreeing_pairs) + "\n";
  tsv += "disagree\t" + std::to_string(report.disagreeing_pairs) + "\n";
  json equal = json::array();
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      tsv += std::string("equal\t") + method_name(methods[i]) + "\t" +
             method_name(methods[j]) +
             (report.relations_equal[i][j] ? "\t1\n" : "\t0\n");
      equal.push_back({{"first", method_name(methods[i])},
                       {"second", method_name(methods[j])},
                       {"equal", report.relations_equal[i][j]}});
    }
  }
  emit(opt, tsv,
       json{{"vertices", n.vertices().labels()},
            {"pairs", pairs},
            {"agree", report.agreeing_pairs},
            {"disagree", report.disagreeing_pairs},
            {"equal", equal}});
  return kExitOk;
}

int run_check(const std::vector<std::string>& props, const SuiteConfig& cfg,
              const Options& opt) {
  const auto reports = run_suite(props, cfg);

  constexpr std::size_t kMaxNotesShown = 5;
  std::string tsv;
  json reports_json = json::array();
  for (const PropertyReport& r : reports) {
    const char* status = r.exploratory        ? "report-only"
                         : r.failures.empty() ? "pass"
                                              : "fail";
    tsv += "prop\t" + r.property + "\t" + std::to_string(r.instances) + "\t" +
           std::to_string(r.failures.size()) + "\t" + status + "\n";
    json failures = json::array();
    for (const PropertyFailure& f : r.failures) {
      failures.push_back({{"seed", f.seed},
                          {"assertion", f.assertion},
                          {"instance", f.instance}});
    }
    if (!r.failures.empty()) {
      const PropertyFailure& f = r.failures.front();
      tsv += "counterexample\t" + r.property +
             "\tseed=" + std::to_string(f.seed) + "\t" + f.assertion + "\n";
      std::istringstream lines(f.instance);
      std::string line;
      while (std::getline(lines, line)) {
        tsv += "instance\t" + line + "\n";
      }
    }
    for (std::size_t i = 0; i < r.notes.size() && i < kMaxNotesShown; ++i) {
      tsv += "note\t" + r.property + "\t" + r.notes[i] + "\n";
    }
    if (r.notes.size() > kMaxNotesShown) {
      tsv += "note\t" + r.property + "\t(" +
             std::to_string(r.notes.size() - kMaxNotesShown) + " more)\n";
    }
    reports_json.push_back({{"property", r.property},
                            {"exploratory", r.exploratory},
                            {"instances", r.instances},
                            {"failures", failures},
                            {"notes", r.notes}});
  }
  const bool failed = suite_failed(reports);
  tsv += std::string("result\t") + (failed ? "fail" : "pass") + "\n";
  emit(opt, tsv,
       json{{"seed", cfg.seed},
            {"count", cfg.count},
            {"failed", failed},
            {"reports", reports_json}});
  return failed ? kExitCounterexample : kExitOk;
}

int run_gen(const GeneratorSpec& spec) {
  std::cout << serialize_edges(generate(spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow network ranking toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"tsv", "tree"}));
  app.add_flag("--sort-labels", opt.sort_labels,
               "sort vertex labels instead of first-seen order");

  const std::vector<std::string> method_choices{"flow", "borda", "dual-borda",
                                                "schulze"};

  auto* matrix = app.add_subcommand(
      "matrix", "all-pairs maximum flow values (optionally strengths)");
  std::string matrix_input;
  bool with_schulze = false;
  bool with_oracle = false;
  int oracle_max_n = 5;
  std::int64_t oracle_max_cap = 12;
  matrix->add_option("input", matrix_input, "network file, or - for stdin");
  matrix->add_flag("--schulze", with_schulze, "add widest-path strengths");
  matrix->add_flag("--oracle", with_oracle,
                   "cross-check against the path-packing oracle");
  matrix->add_option("--oracle-max-n", oracle_max_n, "oracle guard: vertices");
  matrix->add_option("--oracle-max-cap", oracle_max_cap,
                     "oracle guard: total capacity");

  auto* rank = app.add_subcommand("rank", "relation and consistent rankings");
  std::string rank_input;
  std::string rank_method = "flow";
  std::size_t rank_limit = 10;
  rank->add_option("input", rank_input, "network file, or - for stdin");
  rank->add_option("--method", rank_method, "ranking method")
      ->check(CLI::IsMember(method_choices));
  rank->add_option("--limit", rank_limit, "max refinements to print");

  auto* winners = app.add_subcommand("winners", "k-winner sets");
  std::string winners_input;
  std::string winners_method = "flow";
  int winners_k = 1;
  winners->add_option("input", winners_input, "network file, or - for stdin");
  winners->add_option("--method", winners_method, "ranking method")
      ->check(CLI::IsMember(method_choices));
  winners->add_option("-k", winners_k, "winner set size")->required();

  auto* compare = app.add_subcommand("compare", "method-by-method verdicts");
  std::string compare_input;
  std::vector<std::string> compare_methods_opt;
  compare->add_option("input", compare_input, "network file, or - for stdin");
  compare->add_option("--methods", compare_methods_opt, "methods to compare")
      ->delimiter(',')
      ->required()
      ->check(CLI::IsMember(method_choices));

  auto* check = app.add_subcommand("check", "run verification properties");
  std::vector<std::string> check_props;
  SuiteConfig cfg;
  cfg.count = 100;
  check->add_option("--props", check_props,
                    "property names, or 'all' (default)")
      ->delimiter(',');
  check->add_option("--count", cfg.count, "instances per property");
  check->add_option("--seed", cfg.seed, "master seed");
  check->add_option("--max-n", cfg.max_n, "largest vertex count");
  check->add_option("--min-n", cfg.min_n, "smallest vertex count");
  check->add_option("--max-cap", cfg.max_capacity, "largest arc capacity");

  auto* gen = app.add_subcommand("gen", "generate a class network");
  GeneratorSpec spec;
  std::string class_choice = "arbitrary";
  gen->add_option("--class", class_choice, "network class")
      ->check(CLI::IsMember({"arbitrary", "balanced", "class-o", "class-i",
                             "constant", "pseudo-symmetric", "parametric"}));
  gen->add_option("--n", spec.n, "vertex count");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--max-cap", spec.max_capacity, "largest arc capacity");
  gen->add_option("--k", spec.balance, "balance (balanced class)");
  gen->add_option("--value", spec.value, "capacity (constant class)");
  gen->add_option("--a", spec.a, "tail coefficient (parametric class)");
  gen->add_option("--b", spec.b, "head coefficient (parametric class)");
  gen->add_option("--l", spec.l, "offset (parametric class)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*matrix) {
      return run_matrix(matrix_input, with_schulze, with_oracle, oracle_max_n,
                        oracle_max_cap, opt);
    }
    if (*rank) return run_rank(rank_input, rank_method, rank_limit, opt);
    if (*winners) {
      return run_winners(winners_input, winners_method, winners_k, opt);
    }
    if (*compare) return run_compare(compare_input, compare_methods_opt, opt);
    if (*check) return run_check(check_props, cfg, opt);
    if (*gen) {
      spec.cls = *parse_class(class_choice);
      return run_gen(spec);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
