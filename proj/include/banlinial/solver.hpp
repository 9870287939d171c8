#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "banlinial/decomposition.hpp"
#include "banlinial/graph.hpp"
#include "banlinial/oracle.hpp"
#include "banlinial/report.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

enum class SolverPath { EdgeColouring, TreeCycle, TreeBipartite, Flow, Oracle };

std::string to_string(SolverPath p);
// Accepts the to_string names; DomainError otherwise.
SolverPath solver_path_from_string(const std::string& name);

struct SolveOptions {
  std::vector<SolverPath> order = {SolverPath::EdgeColouring, SolverPath::TreeCycle,
                                   SolverPath::TreeBipartite, SolverPath::Oracle};
  SearchBudget budget;
  int oracle_max_n = kOracleMaxN;
  Sign eps = Sign::Plus;
};

// Tries each path in order and stops at the first verified split.
// status: "ok" (split verified), "refuted" (the oracle ran and found no split
// satisfying the conjecture), "budget" (a search ran out of nodes before any
// path succeeded), "unsolved" (every search ended in NONE and the oracle was
// out of range or disabled).
Report solve(const CubicGraph& g, const SolveOptions& opts = {});

// Runs every certificate search and records its outcome and witness.
Report decompose(const CubicGraph& g, SearchBudget budget = {}, int flow_k = 5);

struct SurveyOptions {
  SolveOptions solve;
  int threads = 1;
  bool json_lines = false;
};

struct SurveySummary {
  int graphs = 0;
  int solved = 0;
  int refuted = 0;
  int budget = 0;
  int unsolved = 0;
  int input_errors = 0;
  int internal_errors = 0;
  std::map<std::string, int> by_path;
};

// Reads one graph6 graph per line from `in` and writes one result line per
// input line to `out`, in input order. Blank lines are skipped. Bad lines are
// reported as input errors and do not stop the survey.
SurveySummary survey(std::istream& in, std::ostream& out, const SurveyOptions& opts = {});

}  // namespace banlinial
