#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banlinial/graph.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

CubicGraph k4();
CubicGraph k33();
// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
CubicGraph petersen();
// Two m-cycles 0..m-1 and m..2m-1 joined by the matching i -- i+m. m >= 3.
CubicGraph prism(int m);
// Generalised Petersen graph GP(8,3).
CubicGraph moebius_kantor();

// "petersen", "k4", "k33", "moebius_kantor", "prism" (m = 3) or "prism<m>"/"prism(m)".
CubicGraph named_graph(const std::string& name);

// Configuration model with rejection of loops and repeated edges. Same
// (n, seed) always yields the same graph. DomainError for odd n or n < 4.
CubicGraph random_cubic(int n, std::uint64_t seed);

// All connected cubic graphs on exactly n vertices, one per isomorphism
// class, each in canonical labelling, sorted by canonical code.
std::vector<CubicGraph> all_connected_cubic(int n);

// All cubic trees with exactly n vertices up to isomorphism (n even, >= 2),
// built by repeatedly replacing a leaf with an apex carrying two new leaves.
std::vector<CubicTree> all_cubic_trees(int n);

}  // namespace banlinial
