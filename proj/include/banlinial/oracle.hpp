#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "banlinial/graph.hpp"
#include "banlinial/split.hpp"

namespace banlinial {

inline constexpr int kOracleMaxN = 24;

struct OracleReport {
  int n = 0;
  std::uint64_t assignments = 0;  // enumerated with vertex 0 pinned to X: 2^(n-1)
  // External splits over all 2^n assignments, keyed by |X| - |Y|.
  std::map<int, std::uint64_t> external_by_imbalance;
  std::uint64_t external_total = 0;
  bool conjecture_holds = false;
  // External split with |imbalance| <= 2, preferring a bisection; first in
  // enumeration order (bit v of the mask set = vertex v on Y).
  std::optional<Split> witness;
  std::optional<SplitReport> witness_report;
};

// DomainError if n exceeds max_n.
OracleReport brute_force_ban_linial(const CubicGraph& g, int max_n = kOracleMaxN);

bool external_bisection_exists(const CubicGraph& g, int max_n = kOracleMaxN);

// Calls visit(y_mask) for every external split with vertex 0 on X.
void for_each_external_split(const CubicGraph& g, const std::function<void(std::uint64_t)>& visit,
                             int max_n = kOracleMaxN);

// Bit-level membership test: is s one of the oracle's conjecture-satisfying
// splits? Independent of evaluate_split.
bool oracle_accepts(const CubicGraph& g, const Split& s);

struct SweepReport {
  int max_n = 0;
  int rooted_max_n = 0;
  int trees = 0;
  std::uint64_t unrooted_cases = 0;
  std::uint64_t rooted_cases = 0;
  std::uint64_t exhaustive_none = 0;
  std::uint64_t lemma_failures = 0;
  int fallbacks = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool ok() const { return exhaustive_none == 0 && lemma_failures == 0; }
};

// Every cubic tree with 4..max_n vertices (rooted: 2..rooted_max_n), every
// leaf split, both signs, every X-leaf as root: runs the constructive splitter
// and the exhaustive search and checks both against the lemma. max_n <= 14.
SweepReport lemma_sweep(int max_n, int rooted_max_n = 10);

}  // namespace banlinial
