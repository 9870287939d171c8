#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banlinial/graph.hpp"
#include "banlinial/split.hpp"

namespace banlinial {

// A tree whose vertices all have degree 1 or 3, embedded in a host vertex
// range 0..host_n-1. Host vertices outside the tree are isolated in graph().
class CubicTree {
 public:
  // Throws DomainError unless the edges form a tree with degrees in {1,3}
  // and at least 2 vertices.
  static CubicTree from_edges(int host_n, std::span<const Edge> edges);

  const Graph& graph() const { return g_; }
  int host_size() const { return g_.vertex_count(); }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& leaves() const { return leaves_; }
  const std::vector<int>& internal() const { return internal_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool contains(int v) const { return in_tree_[v] != 0; }
  bool is_leaf(int v) const { return g_.degree(v) == 1; }
  std::vector<Edge> edges() const { return g_.edges(); }

 private:
  Graph g_;
  std::vector<int> vertices_;
  std::vector<int> leaves_;
  std::vector<int> internal_;
  std::vector<char> in_tree_;
};

enum class Sign : int { Plus = 1, Minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Two leaves u, u2 sharing the neighbour apex.
struct CherryPair {
  int u = 0;
  int u2 = 0;
  int apex = 0;
  friend bool operator==(const CherryPair&, const CherryPair&) = default;
};

// Ordered by apex, then by leaves. Precondition: at least 4 vertices.
std::vector<CherryPair> find_cherry_pairs(const CubicTree& t);

// Postcondition checks for the two splitting lemmas. `s` must be total on
// the tree's vertices; `leaf_split` is compared on the leaves only.
struct LemmaCheck {
  bool ok = false;
  int disc = 0;
  std::string failure;  // empty when ok
};
LemmaCheck check_unrooted(const CubicTree& t, const Split& leaf_split, const Split& s, Sign eps);
LemmaCheck check_rooted(const CubicTree& t, const Split& leaf_split, const Split& s, int root,
                        Sign eps);

struct TreeSplitOptions {
  // Largest tree handed to exhaustive search when a reconstructed step fails.
  int fallback_max_vertices = 22;
  // Report fallbacks to std::clog.
  bool log_fallbacks = true;
};

struct TreeSplitStats {
  int reductions_1 = 0;
  int reductions_2 = 0;
  int cherry_merges = 0;
  int base_cases = 0;
  int fallbacks = 0;
};

// Extends a leaf split to the whole tree so that disc lies in eps*{0,1,2} and
// the monochromatic subgraph has at most one vertex of degree > 1.
// Recursion: same-colour cherry merge, exhaustive bases up to 8 vertices,
// then the two reductions selected by contracting mixed cherries to red apexes.
// The returned split has domain exactly the tree's vertices.
Split split_cubic_tree_unrooted(const CubicTree& t, const Split& leaf_split, Sign eps,
                                const TreeSplitOptions& opts = {},
                                TreeSplitStats* stats = nullptr);

// Rooted variant: root is a leaf on X; disc in eps*{-1,...,3}; either the
// root has monochromatic degree 1 and every monochromatic degree is <= 1, or
// the root has monochromatic degree 0 and at most one vertex exceeds 1.
Split split_cubic_tree_rooted(const CubicTree& t, const Split& leaf_split, int root, Sign eps,
                              const TreeSplitOptions& opts = {},
                              TreeSplitStats* stats = nullptr);

// First internal colouring (in mask order, bit i set = i-th internal vertex
// on Y) satisfying the relevant lemma. nullopt only if none exists.
// Throws DomainError if the tree has more than max_vertices vertices.
std::optional<Split> exhaustive_tree_split(const CubicTree& t, const Split& leaf_split, Sign eps,
                                           std::optional<int> rooted_at = std::nullopt,
                                           int max_vertices = 16);

}  // namespace banlinial
