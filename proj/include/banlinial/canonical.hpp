#pragma once

#include <string>
#include <vector>

#include "banlinial/graph.hpp"

namespace banlinial {

// Canonical labelling by individualisation-refinement: colour refinement to
// an equitable partition, then branching on every vertex of the first
// non-singleton cell. The result is the lexicographically least upper-triangle
// adjacency string over all leaves of the search, so two graphs are isomorphic
// iff their codes are equal. Exponential in the worst case; meant for the
// small graphs and trees used by the generators and sweeps.
std::string canonical_code(const Graph& g);

// A relabelling achieving canonical_code: perm[v] is v's new label.
std::vector<int> canonical_labelling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace banlinial
