#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "banlinial/certificates.hpp"
#include "banlinial/graph.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

// None is a mathematical claim (the search space was exhausted);
// BudgetExhausted is not.
enum class SearchOutcome { Found, None, BudgetExhausted };

std::string to_string(SearchOutcome o);

template <class T>
struct SearchResult {
  SearchOutcome outcome = SearchOutcome::None;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
};

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
};

// Cycles of length n/2 + 1 in lexicographic order (least vertex first, then
// the smaller of its two cycle neighbours); the first whose removal leaves a
// connected graph is returned.
SearchResult<TreeCycleDecomposition> find_tree_cycle_decomposition(const CubicGraph& g,
                                                                   SearchBudget budget = {});

// Cubic subtrees, not necessarily spanning: single edges first, then trees
// grown from a set of internal vertices (every edge at an internal vertex is
// a tree edge). First tree with bipartite complement wins.
SearchResult<CubicTree> find_cubic_tree_bipartite_complement(const CubicGraph& g,
                                                              SearchBudget budget = {});

SearchResult<EdgeColouring3> find_3_edge_colouring(const CubicGraph& g, SearchBudget budget = {});

// Flow values assigned on the chords of a BFS spanning tree (a cycle-space
// basis); tree values follow by conservation. Returned normalised (all values
// positive). DomainError unless 2 <= k <= 6.
SearchResult<NowhereZeroFlow> find_nowhere_zero_flow(const CubicGraph& g, int k,
                                                     SearchBudget budget = {});

}  // namespace banlinial
