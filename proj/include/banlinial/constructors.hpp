#pragma once

#include <vector>

#include "banlinial/certificates.hpp"
#include "banlinial/graph.hpp"
#include "banlinial/split.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

// An odd cycle C plus the apex u of a cherry {v, v2} lying on C, coloured so
// that v, v2 are on X, u on Y, and v -- r is the only monochromatic edge.
struct OddCycleGadget {
  Graph graph;  // host-sized: E(C) + uv + uv2
  int v = 0;
  int v2 = 0;
  int u = 0;
  int r = 0;
  Split split;  // assigned on V(C) and u
};

// DomainError for an even cycle, a cherry not on the cycle, or an apex on it.
OddCycleGadget build_odd_cycle_gadget(int host_n, const std::vector<int>& cycle,
                                      const CherryPair& cherry);

struct RepairStats {
  int moves = 0;  // single-vertex moves that finished the repair
  int swaps = 0;  // move-and-swap rounds, each raising the cut
};

// Turns a nearly external bisection into a split passing verify_ban_linial.
// Each round moves the unique offender y across; if that leaves an offender x
// on y's new side, x is moved back, which raises e(X,Y), so the loop ends.
Split repair_nearly_external(const CubicGraph& g, const Split& s, RepairStats* stats = nullptr);

// Pipeline for a cubic tree t whose complement g - E(t) is bipartite.
Split solve_tree_bipartite(const CubicGraph& g, const CubicTree& t, Sign eps = Sign::Plus);

// Pipeline for a tree + cycle decomposition. Even cycles go through
// solve_tree_bipartite; odd cycles use the gadget and the rooted or unrooted
// lemma on T - {v, v2} with eps = -1. n = 4 is solved by the oracle.
Split solve_tree_cycle(const CubicGraph& g, const TreeCycleDecomposition& d);

// 2-colours the even 2-factor G - M3; always an external bisection.
Split split_from_3_edge_colouring(const CubicGraph& g, const EdgeColouring3& ec);

// X = vertices of out-degree 1 after normalising the flow, Y = in-degree 1.
// The result is a (k-2)-bisection whose monochromatic components are trees.
Split flow_to_k_bisection(const CubicGraph& g, const NowhereZeroFlow& f);

}  // namespace banlinial
