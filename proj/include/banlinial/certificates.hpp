#pragma once

#include <map>
#include <vector>

#include "banlinial/graph.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

// Proper 3-edge-colouring; colours are 1, 2, 3.
struct EdgeColouring3 {
  std::map<Edge, int> colour;
};

// Throws DomainError unless every edge of g has a colour in {1,2,3} and the
// colouring is proper (so each class is a perfect matching).
void validate(const CubicGraph& g, const EdgeColouring3& ec);

struct FlowArc {
  int from = 0;
  int to = 0;
  int value = 0;
  friend bool operator==(const FlowArc&, const FlowArc&) = default;
};

// One arc per edge of the carrier graph.
struct NowhereZeroFlow {
  int k = 0;
  std::vector<FlowArc> arcs;

  // Reverses every arc with a negative value.
  NowhereZeroFlow normalized() const;
};

// Throws DomainError unless the arcs cover every edge exactly once, all values
// are non-zero with |value| < k, and flow is conserved at every vertex.
void validate(const CubicGraph& g, const NowhereZeroFlow& f);

// Edge partition into a spanning cubic tree and one cycle through its leaves.
struct TreeCycleDecomposition {
  std::vector<Edge> tree_edges;
  std::vector<int> cycle;  // vertex order around the cycle

  std::vector<Edge> cycle_edges() const;
  CubicTree tree(int host_n) const { return CubicTree::from_edges(host_n, tree_edges); }
};

// Throws DomainError unless the decomposition is valid for g.
void validate(const CubicGraph& g, const TreeCycleDecomposition& d);

// Throws DomainError unless t is a subgraph of g and g - E(t) is bipartite.
void validate_bipartite_complement(const CubicGraph& g, const CubicTree& t);

}  // namespace banlinial
