#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "banlinial/graph.hpp"
#include "banlinial/split.hpp"

namespace banlinial {

// One graph6 line, optionally prefixed by ">>graph6<<"; a trailing newline or
// carriage return is ignored. ParseError on a bad header, a non-minimal size
// field, a wrong body length, characters outside 63..126, or nonzero padding.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// "u v" per line; '#' starts a comment. An optional first data line holding a
// single integer fixes the vertex count, otherwise it is the largest id + 1.
// ParseError carries the 1-based line number.
Graph parse_edge_list(std::string_view text);
// Vertex-count line followed by the sorted edges.
std::string emit_edge_list(const Graph& g);

// X vertices filled black, Y vertices open; cut edges dashed.
std::string emit_dot(const Graph& g, const std::optional<Split>& s = std::nullopt);

// ParseError if g is not cubic, keeping the line number.
CubicGraph as_cubic(const Graph& g, int line = 0);

}  // namespace banlinial
