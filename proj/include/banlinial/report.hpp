#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "banlinial/certificates.hpp"
#include "banlinial/split.hpp"

namespace banlinial {

inline constexpr int kReportSchema = 1;

struct OracleCounts {
  std::uint64_t assignments = 0;
  std::map<int, std::uint64_t> external_by_imbalance;
  std::uint64_t external_total = 0;
  bool conjecture_holds = false;

  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

struct TreeSweepCounts {
  int max_n = 0;
  int rooted_max_n = 0;
  int trees = 0;
  std::uint64_t unrooted_cases = 0;
  std::uint64_t rooted_cases = 0;
  std::uint64_t exhaustive_none = 0;
  std::uint64_t lemma_failures = 0;
  int fallbacks = 0;
  std::vector<std::string> failures;

  friend bool operator==(const TreeSweepCounts&, const TreeSweepCounts&) = default;
};

// Structured record of one run. Optional parts are omitted from the JSON.
struct Report {
  int schema = kReportSchema;
  std::string command;
  std::string graph;  // graph6 of the input, empty for graph-free commands
  int n = 0;
  std::string status;  // "ok", "refuted", "budget", "unsolved", "checked"
  std::optional<std::string> solver_path;
  std::map<std::string, std::string> searches;  // search name -> found / none / budget
  std::optional<Split> split;
  std::optional<SplitReport> split_report;
  std::optional<bool> ban_linial;
  std::optional<EdgeColouring3> edge_colouring;
  std::optional<TreeCycleDecomposition> tree_cycle;
  std::optional<std::vector<Edge>> bipartite_tree;
  std::optional<NowhereZeroFlow> flow;
  std::optional<OracleCounts> oracle;
  std::optional<TreeSweepCounts> sweep;
  double elapsed_ms = 0;

  friend bool operator==(const Report&, const Report&);
};

std::string to_json(const Report& r, int indent = 2);
// ParseError on malformed JSON or a schema mismatch.
Report report_from_json(const std::string& text);

}  // namespace banlinial
