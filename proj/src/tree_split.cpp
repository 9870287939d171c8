#include "banlinial/tree_split.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <sstream>

#include "banlinial/errors.hpp"

namespace banlinial {

CubicTree CubicTree::from_edges(int host_n, std::span<const Edge> edges) {
  CubicTree t;
  t.g_ = Graph::from_edges(host_n, edges);
  t.in_tree_.assign(host_n, 0);
  for (int v = 0; v < host_n; ++v) {
    const int d = t.g_.degree(v);
    if (d == 0) continue;
    if (d != 1 && d != 3)
      throw DomainError("cubic tree vertex " + std::to_string(v) + " has degree " +
                        std::to_string(d));
    t.in_tree_[v] = 1;
    t.vertices_.push_back(v);
    (d == 1 ? t.leaves_ : t.internal_).push_back(v);
  }
  if (t.vertices_.size() < 2) throw DomainError("cubic tree needs at least 2 vertices");
  if (t.g_.edge_count() + 1 != t.size()) throw DomainError("edge set is not a tree");
  // n-1 edges plus connectivity on the tree's vertices.
  std::vector<char> seen(host_n, 0);
  std::vector<int> stack{t.vertices_.front()};
  seen[t.vertices_.front()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int w : t.g_.neighbours(x))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != t.size()) throw DomainError("edge set is not connected");
  return t;
}

std::vector<CherryPair> find_cherry_pairs(const CubicTree& t) {
  if (t.size() < 4) throw DomainError("cherry pairs need a tree with at least 4 vertices");
  std::vector<CherryPair> out;
  for (int v : t.internal()) {
    std::vector<int> leaves;
    for (int w : t.graph().neighbours(v))
      if (t.is_leaf(w)) leaves.push_back(w);
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = i + 1; j < leaves.size(); ++j) out.push_back({leaves[i], leaves[j], v});
  }
  return out;
}

namespace {

// The tree as seen by one level of the recursion: the original tree with some
// vertices deleted. Leaves of the current tree always carry a colour.
struct WorkTree {
  const Graph* g = nullptr;
  std::vector<char> alive;
  int size = 0;

  int degree(int v) const {
    int d = 0;
    for (int w : g->neighbours(v)) d += alive[w];
    return d;
  }
  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (int w : g->neighbours(v))
      if (alive[w]) out.push_back(w);
    return out;
  }
  std::vector<int> leaf_neighbours(int v) const {
    std::vector<int> out;
    for (int w : g->neighbours(v))
      if (alive[w] && degree(w) == 1) out.push_back(w);
    return out;
  }
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(alive.size()); ++v)
      if (alive[v]) out.push_back(v);
    return out;
  }
  WorkTree without(std::initializer_list<int> removed) const {
    WorkTree out = *this;
    for (int v : removed) {
      out.alive[v] = 0;
      --out.size;
    }
    return out;
  }
};

struct MonoProfile {
  int disc = 0;
  int high = 0;  // vertices of mono degree > 1
  int max_degree = 0;
  int root_degree = 0;
};

MonoProfile profile(const WorkTree& t, const Split& c, int root) {
  MonoProfile p;
  std::vector<int> deg(t.alive.size(), 0);
  for (int v = 0; v < static_cast<int>(t.alive.size()); ++v) {
    if (!t.alive[v]) continue;
    for (int w : t.g->neighbours(v)) {
      if (w < v || !t.alive[w] || c.side(v) != c.side(w)) continue;
      p.disc += c.side(v) == Side::X ? 1 : -1;
      ++deg[v];
      ++deg[w];
    }
  }
  for (int v = 0; v < static_cast<int>(deg.size()); ++v) {
    if (deg[v] > 1) ++p.high;
    p.max_degree = std::max(p.max_degree, deg[v]);
  }
  if (root >= 0) p.root_degree = deg[root];
  return p;
}

bool unrooted_ok(const MonoProfile& p, Sign eps) {
  const int d = p.disc * value(eps);
  return d >= 0 && d <= 2 && p.high <= 1;
}

bool rooted_ok(const MonoProfile& p, Sign eps) {
  const int d = p.disc * value(eps);
  if (d < -1 || d > 3) return false;
  return (p.root_degree == 1 && p.max_degree <= 1) || (p.root_degree == 0 && p.high <= 1);
}

bool satisfies(const WorkTree& t, const Split& c, Sign eps, int root) {
  const MonoProfile p = profile(t, c, root);
  return root >= 0 ? rooted_ok(p, eps) : unrooted_ok(p, eps);
}

// Tries every colouring of the current internal vertices, mask order.
bool exhaust(const WorkTree& t, Split& c, Sign eps, int root) {
  std::vector<int> inner;
  for (int v : t.vertices())
    if (t.degree(v) > 1) inner.push_back(v);
  const std::uint64_t total = std::uint64_t{1} << inner.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < inner.size(); ++i)
      c.assign(inner[i], (mask >> i) & 1 ? Side::Y : Side::X);
    if (satisfies(t, c, eps, root)) return true;
  }
  return false;
}

enum class ReductionKind { One, Two };

struct Reduction {
  ReductionKind kind;
  int v;  // centre of the cherry pair in the contracted tree
  int a;  // R1: first red apex.   R2: the leaf next to v.
  int b;  // R1: second red apex.  R2: the red apex w.
};

// Contract every mixed cherry to a red apex and return the first cherry pair
// of the contracted tree (by centre, then members) avoiding `forbidden`.
std::optional<Reduction> select_reduction(const WorkTree& t, std::array<int, 2> forbidden) {
  const int n = static_cast<int>(t.alive.size());
  std::vector<char> red(n, 0), leaf(n, 0);
  for (int v = 0; v < n; ++v)
    if (t.alive[v]) leaf[v] = t.degree(v) == 1;
  for (int v = 0; v < n; ++v) {
    if (!t.alive[v] || leaf[v]) continue;
    if (t.leaf_neighbours(v).size() == 2) red[v] = 1;
  }
  auto contracted_leaf = [&](int x) {
    if (red[x]) return true;
    return leaf[x] && !red[t.neighbours(x).front()];
  };
  for (int v = 0; v < n; ++v) {
    if (!t.alive[v] || leaf[v] || red[v]) continue;
    std::vector<int> ends;
    for (int w : t.neighbours(v))
      if (contracted_leaf(w) && w != forbidden[0] && w != forbidden[1]) ends.push_back(w);
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        const int x = ends[i], y = ends[j];
        if (red[x] && red[y]) return Reduction{ReductionKind::One, v, x, y};
        if (red[x] || red[y]) {
          const int w = red[x] ? x : y;
          const int l = red[x] ? y : x;
          return Reduction{ReductionKind::Two, v, l, w};
        }
      }
  }
  return std::nullopt;
}

struct Recursion {
  const TreeSplitOptions& opts;
  TreeSplitStats& stats;

  void fallback(const WorkTree& t, Split& c, Sign eps, int root, const char* step) {
    ++stats.fallbacks;
    if (opts.log_fallbacks) {
      std::clog << "tree-split: " << step << " failed its postcondition on a " << t.size
                << "-vertex subtree" << (root >= 0 ? " (rooted)" : "")
                << "; falling back to exhaustive search\n";
    }
    if (t.size > opts.fallback_max_vertices)
      throw InvariantViolation(std::string("tree-split: ") + step +
                               " failed and the subtree is too large for exhaustive search");
    if (!exhaust(t, c, eps, root))
      throw InvariantViolation("tree-split: no colouring satisfies the lemma on a subtree");
  }

  void guard(const WorkTree& t, Split& c, Sign eps, int root, const char* step) {
    if (!satisfies(t, c, eps, root)) fallback(t, c, eps, root, step);
  }

  void base(const WorkTree& t, Split& c, Sign eps, int root) {
    ++stats.base_cases;
    if (!exhaust(t, c, eps, root))
      throw InvariantViolation("tree-split: base case has no valid colouring");
  }

  // First same-coloured cherry pair not touching `skip`.
  std::optional<std::array<int, 3>> same_colour_cherry(const WorkTree& t, const Split& c,
                                                       int skip) {
    for (int v = 0; v < static_cast<int>(t.alive.size()); ++v) {
      if (!t.alive[v] || t.degree(v) != 3) continue;
      const auto ls = t.leaf_neighbours(v);
      for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
          if (ls[i] == skip || ls[j] == skip) continue;
          if (c.side(ls[i]) == c.side(ls[j])) return std::array<int, 3>{ls[i], ls[j], v};
        }
    }
    return std::nullopt;
  }

  // Either recursion; `root` < 0 selects the unrooted lemma.
  void reduce(const WorkTree& t, Split& c, Sign eps, int root) {
    const bool rooted = root >= 0;
    if (rooted ? t.size <= 8 : t.size <= 4) {
      base(t, c, eps, root);
      return;
    }

    if (auto cherry = same_colour_cherry(t, c, root)) {
      const auto [w, w2, v] = *cherry;
      ++stats.cherry_merges;
      c.assign(v, opposite(c.side(w)));
      reduce(t.without({w, w2}), c, eps, root);
      guard(t, c, eps, root, "cherry merge");
      return;
    }

    if (t.size <= 8) {
      base(t, c, eps, root);
      return;
    }

    int root_apex = -1;
    if (rooted) {
      root_apex = t.neighbours(root).front();
      const auto ls = t.leaf_neighbours(root_apex);
      if (ls.size() == 2) {
        const int other = ls[0] == root ? ls[1] : ls[0];
        if (c.side(other) == c.side(root)) {
          // The root's edge becomes a cut edge, so the unrooted lemma finishes.
          ++stats.cherry_merges;
          c.assign(root_apex, opposite(c.side(root)));
          reduce(t.without({root, other}), c, eps, -1);
          guard(t, c, eps, root, "root cherry merge");
          return;
        }
      }
    }

    const auto red = select_reduction(t, {root, root_apex});
    if (!red) {
      fallback(t, c, eps, root, "reduction selection");
      return;
    }

    if (red->kind == ReductionKind::One) {
      ++stats.reductions_1;
      const int v = red->v, a = red->a, b = red->b;
      const auto al = t.leaf_neighbours(a);
      const auto bl = t.leaf_neighbours(b);
      const Side centre = eps == Sign::Plus ? Side::Y : Side::X;
      c.assign(v, centre);
      reduce(t.without({a, b, al[0], al[1], bl[0], bl[1]}), c, negate(eps), root);
      c.assign(a, opposite(centre));
      c.assign(b, opposite(centre));
      guard(t, c, eps, root, "reduction 1");
      return;
    }

    ++stats.reductions_2;
    const int v = red->v, leaf = red->a, w = red->b;
    int u = -1;
    for (int x : t.neighbours(v))
      if (x != leaf && x != w) u = x;
    const auto wl = t.leaf_neighbours(w);
    const Side s = c.side(leaf);
    c.assign(v, s);
    reduce(t.without({leaf, w, wl[0], wl[1]}), c, eps, root);
    if (c.side(u) != s) {
      c.assign(w, opposite(s));
    } else {
      c.assign(v, opposite(s));
      c.assign(w, s);
    }
    guard(t, c, eps, root, "reduction 2");
  }
};

void validate_leaf_split(const CubicTree& t, const Split& ls) {
  if (ls.size() != t.host_size())
    throw DomainError("leaf split size " + std::to_string(ls.size()) + " does not match host size " +
                      std::to_string(t.host_size()));
  for (int v = 0; v < t.host_size(); ++v) {
    const bool leaf = t.contains(v) && t.is_leaf(v);
    if (leaf && !ls.assigned(v))
      throw DomainError("leaf " + std::to_string(v) + " has no colour");
    if (!leaf && ls.assigned(v))
      throw DomainError("leaf split assigns non-leaf vertex " + std::to_string(v));
  }
}

WorkTree whole(const CubicTree& t) {
  WorkTree w;
  w.g = &t.graph();
  w.alive.assign(t.host_size(), 0);
  for (int v : t.vertices()) w.alive[v] = 1;
  w.size = t.size();
  return w;
}

Split restrict_to_tree(const CubicTree& t, const Split& c) {
  Split out(t.host_size());
  for (int v : t.vertices()) out.assign(v, c.side(v));
  return out;
}

void validate_root(const CubicTree& t, const Split& ls, int root) {
  if (root < 0 || root >= t.host_size() || !t.contains(root) || !t.is_leaf(root))
    throw DomainError("root " + std::to_string(root) + " is not a leaf of the tree");
  if (ls.side(root) != Side::X) throw DomainError("root must be on side X");
}

LemmaCheck check_common(const CubicTree& t, const Split& ls, const Split& s, Sign eps, int root) {
  LemmaCheck out;
  if (s.size() != t.host_size()) {
    out.failure = "split size does not match host size";
    return out;
  }
  for (int v : t.vertices())
    if (!s.assigned(v)) {
      out.failure = "vertex " + std::to_string(v) + " is not coloured";
      return out;
    }
  for (int v : t.leaves())
    if (ls.assigned(v) && ls.side(v) != s.side(v)) {
      out.failure = "leaf " + std::to_string(v) + " changed colour";
      return out;
    }
  const MonoProfile p = profile(whole(t), s, root);
  out.disc = p.disc;
  const bool ok = root >= 0 ? rooted_ok(p, eps) : unrooted_ok(p, eps);
  if (!ok) {
    std::ostringstream msg;
    msg << "disc " << p.disc << ", " << p.high << " vertices of mono degree > 1";
    if (root >= 0) msg << ", root mono degree " << p.root_degree;
    out.failure = msg.str();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

LemmaCheck check_unrooted(const CubicTree& t, const Split& leaf_split, const Split& s, Sign eps) {
  return check_common(t, leaf_split, s, eps, -1);
}

LemmaCheck check_rooted(const CubicTree& t, const Split& leaf_split, const Split& s, int root,
                        Sign eps) {
  return check_common(t, leaf_split, s, eps, root);
}

Split split_cubic_tree_unrooted(const CubicTree& t, const Split& leaf_split, Sign eps,
                                const TreeSplitOptions& opts, TreeSplitStats* stats) {
  if (t.size() < 4) throw DomainError("unrooted tree split needs at least 4 vertices");
  validate_leaf_split(t, leaf_split);
  TreeSplitStats local;
  Recursion rec{opts, stats ? *stats : local};
  Split c = leaf_split;
  rec.reduce(whole(t), c, eps, -1);
  Split out = restrict_to_tree(t, c);
  const LemmaCheck check = check_unrooted(t, leaf_split, out, eps);
  if (!check.ok) throw InvariantViolation("unrooted tree split postcondition: " + check.failure);
  return out;
}

Split split_cubic_tree_rooted(const CubicTree& t, const Split& leaf_split, int root, Sign eps,
                              const TreeSplitOptions& opts, TreeSplitStats* stats) {
  validate_leaf_split(t, leaf_split);
  validate_root(t, leaf_split, root);
  TreeSplitStats local;
  Recursion rec{opts, stats ? *stats : local};
  Split c = leaf_split;
  rec.reduce(whole(t), c, eps, root);
  Split out = restrict_to_tree(t, c);
  const LemmaCheck check = check_rooted(t, leaf_split, out, root, eps);
  if (!check.ok) throw InvariantViolation("rooted tree split postcondition: " + check.failure);
  return out;
}

std::optional<Split> exhaustive_tree_split(const CubicTree& t, const Split& leaf_split, Sign eps,
                                           std::optional<int> rooted_at, int max_vertices) {
  if (t.size() > max_vertices)
    throw DomainError("tree with " + std::to_string(t.size()) +
                      " vertices exceeds the exhaustive bound " + std::to_string(max_vertices));
  validate_leaf_split(t, leaf_split);
  if (rooted_at) validate_root(t, leaf_split, *rooted_at);
  Split c = leaf_split;
  if (!exhaust(whole(t), c, eps, rooted_at.value_or(-1))) return std::nullopt;
  return restrict_to_tree(t, c);
}

}  // namespace banlinial
