#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "banlinial/io.hpp"
#include "banlinial/oracle.hpp"
#include "banlinial/solver.hpp"

using namespace banlinial;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kInputError = 2, kBudget = 3, kInternal = 4 };

struct InputOpts {
  std::string path = "-";
  std::string named;
  std::string format = "graph6";
};

struct OutputOpts {
  std::string out = "text";
};

void add_input(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("input", in.path, "graph file, '-' for standard input")->capture_default_str();
  cmd->add_option("--graph", in.named, "use a built-in graph: k4, k33, petersen, prismN, moebius_kantor");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, OutputOpts& out, bool dot = true) {
  auto set = dot ? std::vector<std::string>{"json", "dot", "text"} : std::vector<std::string>{"json", "text"};
  cmd->add_option("--out", out.out, "output format")->check(CLI::IsMember(set))->capture_default_str();
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CubicGraph load(const InputOpts& in) {
  if (!in.named.empty()) {
    try {
      return named_graph(in.named);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  const std::string text = slurp(in.path);
  if (in.format == "edgelist") return as_cubic(parse_edge_list(text));

  std::istringstream ss(text);
  std::string line, found;
  int line_no = 0, found_at = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!found.empty()) throw ParseError("expected one graph; use 'survey' for streams", line_no);
    found = line;
    found_at = line_no;
  }
  if (found.empty()) throw ParseError("no graph in input");
  try {
    return as_cubic(parse_graph6(found), found_at);
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), found_at);
  }
}

Sign parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return Sign::Plus;
  if (s == "-1" || s == "-") return Sign::Minus;
  throw ParseError("epsilon must be +1 or -1");
}

void print_split_text(std::ostream& os, const Report& r) {
  if (!r.split) return;
  const SplitReport& s = *r.split_report;
  os << "split: " << r.split->to_string() << '\n'
     << "disc: " << s.disc << '\n'
     << "imbalance: " << s.imbalance << '\n'
     << "external: " << (s.is_external ? "true" : "false") << '\n'
     << "nearly_external: " << (s.is_nearly_external ? "true" : "false") << '\n'
     << "offenders:";
  for (int v : s.offenders) os << ' ' << v;
  os << '\n'
     << "max_mono_component: " << s.max_mono_component << '\n'
     << "cut_size: " << s.cut_size << '\n';
  if (r.ban_linial) os << "ban_linial: " << (*r.ban_linial ? "true" : "false") << '\n';
}

void print_report(const Report& r, const OutputOpts& o, const CubicGraph* g) {
  if (o.out == "json") {
    std::cout << to_json(r) << '\n';
    return;
  }
  if (o.out == "dot") {
    std::cout << emit_dot(*g, r.split);
    return;
  }
  std::cout << "command: " << r.command << '\n';
  if (!r.graph.empty()) std::cout << "graph: " << r.graph << '\n' << "n: " << r.n << '\n';
  std::cout << "status: " << r.status << '\n';
  if (r.solver_path) std::cout << "solver_path: " << *r.solver_path << '\n';
  for (const auto& [name, outcome] : r.searches) std::cout << "search " << name << ": " << outcome << '\n';
  print_split_text(std::cout, r);
  if (r.oracle) {
    std::cout << "assignments: " << r.oracle->assignments << '\n';
    for (const auto& [imb, c] : r.oracle->external_by_imbalance)
      std::cout << "external imbalance " << imb << ": " << c << '\n';
    std::cout << "external_total: " << r.oracle->external_total << '\n'
              << "conjecture_holds: " << (r.oracle->conjecture_holds ? "true" : "false") << '\n';
  }
  if (r.sweep) {
    const TreeSweepCounts& s = *r.sweep;
    std::cout << "trees: " << s.trees << '\n'
              << "unrooted_cases: " << s.unrooted_cases << '\n'
              << "rooted_cases: " << s.rooted_cases << '\n'
              << "exhaustive_none: " << s.exhaustive_none << '\n'
              << "lemma_failures: " << s.lemma_failures << '\n'
              << "fallbacks: " << s.fallbacks << '\n';
    for (const auto& f : s.failures) std::cout << "failure: " << f << '\n';
  }
  std::cout << "elapsed_ms: " << r.elapsed_ms << '\n';
}

int exit_for(const std::string& status) {
  if (status == "refuted") return kRefuted;
  if (status == "budget" || status == "unsolved") return kBudget;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ban-Linial splits of cubic graphs"};
  app.require_subcommand(1);

  InputOpts in;
  OutputOpts out;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  int max_n = kOracleMaxN;
  std::string epsilon = "+1";
  std::string order = "edge-colouring,tree-cycle,tree-bipartite,oracle";

  auto* check = app.add_subcommand("check", "evaluate a split of a graph");
  std::string split_text;
  add_input(check, in);
  add_output(check, out);
  check->add_option("--split", split_text, "one X/Y character per vertex")->required();

  auto* solve_cmd = app.add_subcommand("solve", "find and verify a Ban-Linial split");
  add_input(solve_cmd, in);
  add_output(solve_cmd, out);
  solve_cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
  solve_cmd->add_option("--max-n", max_n, "largest graph handed to the oracle")->capture_default_str();
  solve_cmd->add_option("--epsilon", epsilon, "sign for the tree lemma, +1 or -1")->capture_default_str();
  solve_cmd->add_option("--order", order, "comma-separated solver paths")->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "run the certificate searches");
  int flow_k = 5;
  add_input(decompose_cmd, in);
  add_output(decompose_cmd, out);
  decompose_cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
  decompose_cmd->add_option("--k", flow_k, "nowhere-zero flow order")->check(CLI::Range(2, 6))->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force external split counts");
  add_input(oracle_cmd, in);
  add_output(oracle_cmd, out);
  oracle_cmd->add_option("--max-n", max_n, "enumeration bound")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "check both tree lemmas on all small cubic trees");
  int sweep_n = 12, rooted_n = 10;
  add_output(sweep_cmd, out, false);
  sweep_cmd->add_option("--max-n", sweep_n, "largest tree, unrooted (<= 14)")->capture_default_str();
  sweep_cmd->add_option("--rooted-max-n", rooted_n, "largest tree, rooted (<= 14)")->capture_default_str();

  auto* survey_cmd = app.add_subcommand("survey", "solve every graph6 line on standard input");
  int threads = 1;
  add_output(survey_cmd, out, false);
  survey_cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
  survey_cmd->add_option("--max-n", max_n, "largest graph handed to the oracle")->capture_default_str();
  survey_cmd->add_option("--epsilon", epsilon, "sign for the tree lemma, +1 or -1")->capture_default_str();
  survey_cmd->add_option("--order", order, "comma-separated solver paths")->capture_default_str();
  survey_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();

  auto* generate_cmd = app.add_subcommand("generate", "emit graphs");
  std::string gen_named;
  int gen_random = 0, gen_all = 0;
  std::uint64_t seed = 1;
  std::string gen_format = "graph6";
  auto* o_named = generate_cmd->add_option("--named", gen_named, "built-in graph name");
  auto* o_random = generate_cmd->add_option("--random", gen_random, "random cubic graph on N vertices");
  auto* o_all = generate_cmd->add_option("--all", gen_all, "all connected cubic graphs on N vertices (N <= 16)");
  o_named->excludes(o_random)->excludes(o_all);
  o_random->excludes(o_all);
  generate_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  generate_cmd->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    SolveOptions sopts;
    sopts.budget.max_nodes = budget;
    sopts.oracle_max_n = max_n;
    sopts.eps = parse_sign(epsilon);
    sopts.order.clear();
    {
      std::stringstream ss(order);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) {
          try {
            sopts.order.push_back(solver_path_from_string(item));
          } catch (const DomainError& e) {
            throw ParseError(e.what());
          }
        }
    }

    if (*check) {
      const CubicGraph g = load(in);
      Split s;
      try {
        s = Split::from_string(split_text);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      if (s.size() != g.vertex_count() || !s.is_total())
        throw ParseError("split must give one side for each of the " +
                         std::to_string(g.vertex_count()) + " vertices");
      Report r;
      r.command = "check";
      r.graph = emit_graph6(g);
      r.n = g.vertex_count();
      r.status = "checked";
      r.split = s;
      r.split_report = evaluate_split(g, s);
      r.ban_linial = verify_ban_linial(g, s);
      print_report(r, out, &g);
      return kOk;
    }
    if (*solve_cmd) {
      const CubicGraph g = load(in);
      const Report r = solve(g, sopts);
      print_report(r, out, &g);
      return exit_for(r.status);
    }
    if (*decompose_cmd) {
      const CubicGraph g = load(in);
      const Report r = decompose(g, SearchBudget{budget}, flow_k);
      print_report(r, out, &g);
      return exit_for(r.status);
    }
    if (*oracle_cmd) {
      const CubicGraph g = load(in);
      if (g.vertex_count() > max_n)
        throw ParseError("graph has " + std::to_string(g.vertex_count()) + " vertices, oracle bound is " +
                         std::to_string(max_n));
      const auto t0 = std::chrono::steady_clock::now();
      const OracleReport o = brute_force_ban_linial(g, max_n);
      Report r;
      r.command = "oracle";
      r.graph = emit_graph6(g);
      r.n = g.vertex_count();
      r.status = o.conjecture_holds ? "ok" : "refuted";
      r.oracle = OracleCounts{o.assignments, o.external_by_imbalance, o.external_total, o.conjecture_holds};
      if (o.witness) {
        r.split = o.witness;
        r.split_report = o.witness_report;
        r.ban_linial = verify_ban_linial(g, *o.witness);
        r.solver_path = "oracle";
      }
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      print_report(r, out, &g);
      return exit_for(r.status);
    }
    if (*sweep_cmd) {
      const auto t0 = std::chrono::steady_clock::now();
      SweepReport s;
      try {
        s = lemma_sweep(sweep_n, rooted_n);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      Report r;
      r.command = "sweep";
      r.status = s.ok() ? "ok" : "refuted";
      r.sweep = TreeSweepCounts{s.max_n,         s.rooted_max_n,   s.trees,         s.unrooted_cases,
                                s.rooted_cases,  s.exhaustive_none, s.lemma_failures, s.fallbacks,
                                s.failures};
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      print_report(r, out, nullptr);
      return s.ok() ? kOk : kRefuted;
    }
    if (*survey_cmd) {
      SurveyOptions vopts;
      vopts.solve = sopts;
      vopts.threads = threads;
      vopts.json_lines = out.out == "json";
      const SurveySummary sum = survey(std::cin, std::cout, vopts);
      std::cerr << "graphs " << sum.graphs << " solved " << sum.solved << " refuted " << sum.refuted
                << " budget " << sum.budget << " unsolved " << sum.unsolved << " input-errors "
                << sum.input_errors << " internal-errors " << sum.internal_errors;
      for (const auto& [path, c] : sum.by_path) std::cerr << ' ' << path << '=' << c;
      std::cerr << '\n';
      if (sum.internal_errors > 0) return kInternal;
      if (sum.refuted > 0) return kRefuted;
      if (sum.input_errors > 0) return kInputError;
      if (sum.budget + sum.unsolved > 0) return kBudget;
      return kOk;
    }
    if (*generate_cmd) {
      std::vector<CubicGraph> gs;
      try {
        if (!gen_named.empty()) {
          gs.push_back(named_graph(gen_named));
        } else if (gen_random > 0) {
          gs.push_back(random_cubic(gen_random, seed));
        } else if (gen_all > 0) {
          if (gen_all > 16) throw DomainError("--all is limited to 16 vertices");
          if (gen_all % 2 || gen_all < 4) throw DomainError("--all needs an even n >= 4");
          gs = all_connected_cubic(gen_all);
        } else {
          throw DomainError("generate needs --named, --random or --all");
        }
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      for (const CubicGraph& g : gs) {
        if (gen_format == "graph6")
          std::cout << emit_graph6(g) << '\n';
        else
          std::cout << emit_edge_list(g);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
