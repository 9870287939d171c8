#include "banlinial/solver.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "banlinial/constructors.hpp"
#include "banlinial/errors.hpp"
#include "banlinial/io.hpp"

namespace banlinial {

std::string to_string(SolverPath p) {
  switch (p) {
    case SolverPath::EdgeColouring: return "edge-colouring";
    case SolverPath::TreeCycle: return "tree-cycle";
    case SolverPath::TreeBipartite: return "tree-bipartite";
    case SolverPath::Flow: return "flow";
    case SolverPath::Oracle: return "oracle";
  }
  return "?";
}

SolverPath solver_path_from_string(const std::string& name) {
  for (SolverPath p : {SolverPath::EdgeColouring, SolverPath::TreeCycle, SolverPath::TreeBipartite,
                       SolverPath::Flow, SolverPath::Oracle})
    if (to_string(p) == name) return p;
  throw DomainError("unknown solver path '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

OracleCounts counts_of(const OracleReport& r) {
  return {r.assignments, r.external_by_imbalance, r.external_total, r.conjecture_holds};
}

void accept(Report& rep, const CubicGraph& g, const Split& s, SolverPath p) {
  if (!verify_ban_linial(g, s))
    throw InvariantViolation(to_string(p) + " produced a split failing the Ban-Linial check");
  rep.split = s;
  rep.split_report = evaluate_split(g, s);
  rep.ban_linial = true;
  rep.solver_path = to_string(p);
  rep.status = "ok";
}

}  // namespace

Report solve(const CubicGraph& g, const SolveOptions& opts) {
  const auto t0 = Clock::now();
  Report rep;
  rep.command = "solve";
  rep.graph = emit_graph6(g);
  rep.n = g.vertex_count();
  bool budget_hit = false;
  bool oracle_ran = false;

  for (SolverPath p : opts.order) {
    const std::string name = to_string(p);
    auto note = [&](SearchOutcome o) {
      rep.searches[name] = to_string(o);
      if (o == SearchOutcome::BudgetExhausted) budget_hit = true;
    };
    switch (p) {
      case SolverPath::EdgeColouring: {
        auto r = find_3_edge_colouring(g, opts.budget);
        note(r.outcome);
        if (!r.found()) break;
        rep.edge_colouring = *r.witness;
        accept(rep, g, split_from_3_edge_colouring(g, *r.witness), p);
        break;
      }
      case SolverPath::TreeCycle: {
        auto r = find_tree_cycle_decomposition(g, opts.budget);
        note(r.outcome);
        if (!r.found()) break;
        rep.tree_cycle = *r.witness;
        accept(rep, g, solve_tree_cycle(g, *r.witness), p);
        break;
      }
      case SolverPath::TreeBipartite: {
        auto r = find_cubic_tree_bipartite_complement(g, opts.budget);
        note(r.outcome);
        if (!r.found()) break;
        rep.bipartite_tree = r.witness->edges();
        accept(rep, g, solve_tree_bipartite(g, *r.witness, opts.eps), p);
        break;
      }
      case SolverPath::Flow: {
        auto r = find_nowhere_zero_flow(g, 4, opts.budget);
        note(r.outcome);
        if (!r.found()) break;
        rep.flow = *r.witness;
        accept(rep, g, flow_to_k_bisection(g, *r.witness), p);
        break;
      }
      case SolverPath::Oracle: {
        if (g.vertex_count() > opts.oracle_max_n) {
          rep.searches[name] = "skipped";
          break;
        }
        const OracleReport o = brute_force_ban_linial(g, opts.oracle_max_n);
        oracle_ran = true;
        rep.oracle = counts_of(o);
        rep.searches[name] = o.witness ? "found" : "none";
        if (o.witness) accept(rep, g, *o.witness, p);
        break;
      }
    }
    if (rep.status == "ok") break;
  }

  if (rep.status != "ok") {
    if (oracle_ran)
      rep.status = "refuted";
    else
      rep.status = budget_hit ? "budget" : "unsolved";
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

Report decompose(const CubicGraph& g, SearchBudget budget, int flow_k) {
  const auto t0 = Clock::now();
  Report rep;
  rep.command = "decompose";
  rep.graph = emit_graph6(g);
  rep.n = g.vertex_count();
  rep.status = "ok";
  auto note = [&](const std::string& name, SearchOutcome o) {
    rep.searches[name] = to_string(o);
    if (o == SearchOutcome::BudgetExhausted) rep.status = "budget";
  };

  auto ec = find_3_edge_colouring(g, budget);
  note("edge-colouring", ec.outcome);
  if (ec.found()) rep.edge_colouring = *ec.witness;

  auto tc = find_tree_cycle_decomposition(g, budget);
  note("tree-cycle", tc.outcome);
  if (tc.found()) rep.tree_cycle = *tc.witness;

  auto bt = find_cubic_tree_bipartite_complement(g, budget);
  note("tree-bipartite", bt.outcome);
  if (bt.found()) rep.bipartite_tree = bt.witness->edges();

  auto fl = find_nowhere_zero_flow(g, flow_k, budget);
  note("flow-" + std::to_string(flow_k), fl.outcome);
  if (fl.found()) {
    rep.flow = *fl.witness;
    const Split s = flow_to_k_bisection(g, *fl.witness);
    rep.split = s;
    rep.split_report = evaluate_split(g, s);
    rep.ban_linial = verify_ban_linial(g, s);
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

namespace {

struct SurveyItem {
  std::string line;
  int line_no = 0;
};

struct SurveyResult {
  std::string text;
  std::string status;  // solve status, or "input-error"
  std::optional<std::string> path;
};

SurveyResult survey_one(const SurveyItem& item, const SurveyOptions& opts) {
  SurveyResult res;
  std::ostringstream out;
  try {
    const CubicGraph g = as_cubic(parse_graph6(item.line), item.line_no);
    Report rep = solve(g, opts.solve);
    rep.command = "survey";
    rep.elapsed_ms = 0;
    res.status = rep.status;
    res.path = rep.solver_path;
    if (opts.json_lines) {
      out << to_json(rep, -1);
    } else {
      out << item.line_no << ' ' << rep.graph << " n=" << rep.n << " status=" << rep.status
          << " path=" << rep.solver_path.value_or("-");
      if (rep.split) out << " imbalance=" << rep.split_report->imbalance << " split=" << rep.split->to_string();
    }
  } catch (const ParseError& e) {
    res.status = "input-error";
    const std::string msg =
        e.line() > 0 ? e.what() : "line " + std::to_string(item.line_no) + ": " + e.what();
    if (opts.json_lines) {
      Report rep;
      rep.command = "survey";
      rep.status = "input-error";
      rep.searches["input"] = msg;
      out << to_json(rep, -1);
    } else {
      out << item.line_no << " input-error " << msg;
    }
  } catch (const std::exception& e) {
    res.status = "internal-error";
    out << item.line_no << " internal-error " << e.what();
  }
  res.text = out.str();
  return res;
}

}  // namespace

SurveySummary survey(std::istream& in, std::ostream& out, const SurveyOptions& opts) {
  std::vector<SurveyItem> items;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    items.push_back({line, line_no});
  }

  std::vector<std::optional<SurveyResult>> results(items.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      SurveyResult r = survey_one(items[i], opts);
      std::lock_guard lock(mu);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };

  const int workers = std::max(1, opts.threads);
  std::vector<std::jthread> pool;
  if (workers > 1)
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  if (workers == 1) work();

  SurveySummary sum;
  for (std::size_t i = 0; i < items.size(); ++i) {
    SurveyResult r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      r = std::move(*results[i]);
      results[i].reset();
    }
    out << r.text << '\n';
    ++sum.graphs;
    if (r.status == "ok") {
      ++sum.solved;
      ++sum.by_path[r.path.value_or("-")];
    } else if (r.status == "refuted") {
      ++sum.refuted;
    } else if (r.status == "budget") {
      ++sum.budget;
    } else if (r.status == "unsolved") {
      ++sum.unsolved;
    } else if (r.status == "input-error") {
      ++sum.input_errors;
    } else {
      ++sum.internal_errors;
    }
  }
  out.flush();
  return sum;
}

}  // namespace banlinial
