#include "banlinial/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "banlinial/errors.hpp"

namespace banlinial {

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::None: return "none";
    case SearchOutcome::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

struct Counter {
  std::uint64_t nodes = 0;
  std::uint64_t cap;
  bool exhausted = false;

  bool tick() {
    if (++nodes > cap) exhausted = true;
    return !exhausted;
  }
};

template <class T>
SearchResult<T> finish(std::optional<T> witness, const Counter& c) {
  SearchResult<T> r;
  r.nodes = c.nodes;
  if (witness) {
    r.outcome = SearchOutcome::Found;
    r.witness = std::move(witness);
  } else {
    r.outcome = c.exhausted ? SearchOutcome::BudgetExhausted : SearchOutcome::None;
  }
  return r;
}

// ---------------------------------------------------------------- tree + cycle

struct CycleSearch {
  const CubicGraph& g;
  int length;
  Counter& counter;
  std::vector<int> path;
  std::vector<char> on_path;
  std::optional<TreeCycleDecomposition> found;

  bool accept() {
    TreeCycleDecomposition d;
    d.cycle = path;
    const auto ce = d.cycle_edges();
    const Graph rest = g.graph().without_edges(ce);
    if (!rest.is_connected()) return false;
    d.tree_edges = rest.edges();
    validate(g, d);
    found = std::move(d);
    return true;
  }

  bool extend(int start) {
    if (!counter.tick()) return false;
    const int x = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.has_edge(x, start) && path[1] < path.back()) return accept();
      return false;
    }
    for (int w : g.neighbours(x)) {
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      const bool done = extend(start);
      on_path[w] = 0;
      path.pop_back();
      if (done || counter.exhausted) return done;
    }
    return false;
  }
};

// -------------------------------------------------- bipartite-complement tree

bool complement_bipartite(const CubicGraph& g, const std::vector<Edge>& tree_edges) {
  return !g.graph().without_edges(tree_edges).two_colouring_or_empty().empty();
}

struct SubtreeSearch {
  const CubicGraph& g;
  Counter& counter;
  std::vector<char> inner;
  std::vector<int> touch;  // number of inner neighbours
  std::optional<CubicTree> found;

  // Inner set induces a tree and no outside vertex sees two inner vertices.
  bool can_add(int w) const {
    if (touch[w] != 1) return false;
    for (int x : g.neighbours(w))
      if (!inner[x] && touch[x] >= 1) return false;
    return true;
  }

  std::vector<Edge> tree_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
      if (inner[e.u] || inner[e.v]) out.push_back(e);
    return out;
  }

  bool check() {
    const auto te = tree_edges();
    if (!complement_bipartite(g, te)) return false;
    found = CubicTree::from_edges(g.vertex_count(), te);
    return true;
  }

  void add(int w, int delta) {
    inner[w] = delta > 0;
    for (int x : g.neighbours(w)) touch[x] += delta;
  }

  // Enumerates every connected inner set with least vertex `root` once.
  bool grow(int root, std::vector<int> extension) {
    if (!counter.tick()) return false;
    if (check()) return true;
    while (!extension.empty()) {
      const int w = extension.front();
      extension.erase(extension.begin());
      if (!can_add(w)) continue;
      std::vector<int> next = extension;
      for (int x : g.neighbours(w)) {
        if (x <= root || inner[x] || touch[x] > 0) continue;
        if (std::find(next.begin(), next.end(), x) == next.end()) next.push_back(x);
      }
      std::sort(next.begin(), next.end());
      add(w, +1);
      const bool done = grow(root, std::move(next));
      add(w, -1);
      if (done || counter.exhausted) return done;
    }
    return false;
  }
};

// --------------------------------------------------------- 3-edge-colouring

std::vector<Edge> bfs_edge_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Edge> order;
  std::set<Edge> placed;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int w : g.neighbours(x)) {
        if (placed.insert(Edge(x, w)).second) order.emplace_back(x, w);
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return order;
}

struct ColouringSearch {
  const CubicGraph& g;
  Counter& counter;
  std::vector<Edge> order;
  std::vector<int> colour;
  std::vector<unsigned> used;  // colour bits at each vertex

  bool assign(std::size_t i) {
    if (i == order.size()) return true;
    if (!counter.tick()) return false;
    const Edge e = order[i];
    for (int c = 1; c <= 3; ++c) {
      // The first three edges all meet vertex 0; fixing their colours only
      // removes colour permutations.
      if (i < 3 && c != static_cast<int>(i) + 1) continue;
      const unsigned bit = 1u << c;
      if ((used[e.u] | used[e.v]) & bit) continue;
      used[e.u] |= bit;
      used[e.v] |= bit;
      colour[i] = c;
      if (assign(i + 1)) return true;
      used[e.u] &= ~bit;
      used[e.v] &= ~bit;
      if (counter.exhausted) return false;
    }
    return false;
  }
};

// ------------------------------------------------------------ nowhere-zero flow

struct FlowSearch {
  int k;
  Counter& counter;
  std::vector<Edge> chords;
  std::vector<Edge> tree;
  // For each tree edge: (chord index, sign) of every fundamental cycle through it.
  std::vector<std::vector<std::pair<int, int>>> through;
  // Tree edges whose last contributing chord is i.
  std::vector<std::vector<int>> settle;
  std::vector<int> value;
  std::vector<int> candidates;

  bool tree_value_ok(int t) const {
    int sum = 0;
    for (auto [c, sign] : through[t]) sum += sign * value[c];
    return sum != 0 && sum < k && sum > -k;
  }

  bool assign(std::size_t i) {
    if (i == chords.size()) return true;
    if (!counter.tick()) return false;
    for (int x : candidates) {
      // Negating a flow gives a flow: fix the first chord positive.
      if (i == 0 && x < 0) continue;
      value[i] = x;
      bool ok = true;
      for (int t : settle[i])
        if (!tree_value_ok(t)) {
          ok = false;
          break;
        }
      if (ok && assign(i + 1)) return true;
      if (counter.exhausted) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult<TreeCycleDecomposition> find_tree_cycle_decomposition(const CubicGraph& g,
                                                                   SearchBudget budget) {
  Counter counter{0, budget.max_nodes};
  const int n = g.vertex_count();
  CycleSearch search{g, n / 2 + 1, counter, {}, std::vector<char>(n, 0), std::nullopt};
  for (int s = 0; s < n && !search.found && !counter.exhausted; ++s) {
    search.path = {s};
    search.on_path[s] = 1;
    search.extend(s);
    search.on_path[s] = 0;
  }
  return finish(std::move(search.found), counter);
}

SearchResult<CubicTree> find_cubic_tree_bipartite_complement(const CubicGraph& g,
                                                              SearchBudget budget) {
  Counter counter{0, budget.max_nodes};
  const int n = g.vertex_count();
  std::optional<CubicTree> found;
  for (const Edge& e : g.edges()) {
    if (!counter.tick()) break;
    const std::vector<Edge> single{e};
    if (complement_bipartite(g, single)) {
      found = CubicTree::from_edges(n, single);
      break;
    }
  }
  SubtreeSearch search{g, counter, std::vector<char>(n, 0), std::vector<int>(n, 0), std::nullopt};
  for (int root = 0; root < n && !found && !counter.exhausted; ++root) {
    search.add(root, +1);
    std::vector<int> ext;
    for (int x : g.neighbours(root))
      if (x > root) ext.push_back(x);
    if (search.grow(root, ext)) found = search.found;
    search.add(root, -1);
  }
  if (found) validate_bipartite_complement(g, *found);
  return finish(std::move(found), counter);
}

SearchResult<EdgeColouring3> find_3_edge_colouring(const CubicGraph& g, SearchBudget budget) {
  Counter counter{0, budget.max_nodes};
  ColouringSearch search{g, counter, bfs_edge_order(g), {}, std::vector<unsigned>(g.vertex_count(), 0)};
  search.colour.assign(search.order.size(), 0);
  std::optional<EdgeColouring3> found;
  if (search.assign(0)) {
    EdgeColouring3 ec;
    for (std::size_t i = 0; i < search.order.size(); ++i)
      ec.colour[search.order[i]] = search.colour[i];
    validate(g, ec);
    found = std::move(ec);
  }
  return finish(std::move(found), counter);
}

SearchResult<NowhereZeroFlow> find_nowhere_zero_flow(const CubicGraph& g, int k,
                                                     SearchBudget budget) {
  if (k < 2 || k > 6) throw DomainError("flow order k must be in 2..6");
  Counter counter{0, budget.max_nodes};
  const int n = g.vertex_count();

  // BFS spanning tree; reference orientation of every edge is u -> v with u < v.
  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::set<Edge> tree_set;
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int w : g.neighbours(x))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = x;
        depth[w] = depth[x] + 1;
        tree_set.insert(Edge(x, w));
        q.push(w);
      }
  }

  FlowSearch search{k, counter, {}, {}, {}, {}, {}, {}};
  std::map<Edge, int> tree_index;
  for (const Edge& e : g.edges()) {
    if (tree_set.count(e)) {
      tree_index[e] = static_cast<int>(search.tree.size());
      search.tree.push_back(e);
    } else {
      search.chords.push_back(e);
    }
  }
  search.through.resize(search.tree.size());
  for (int c = 0; c < static_cast<int>(search.chords.size()); ++c) {
    // Unit flow u -> v on the chord returns v -> u through the tree.
    int a = search.chords[c].v, b = search.chords[c].u;
    auto step = [&](int from, int to) {
      const Edge e(from, to);
      search.through[tree_index.at(e)].emplace_back(c, from == e.u ? 1 : -1);
    };
    std::vector<std::pair<int, int>> tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        step(a, parent[a]);
        a = parent[a];
      } else {
        tail.emplace_back(parent[b], b);
        b = parent[b];
      }
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) step(it->first, it->second);
  }

  std::optional<NowhereZeroFlow> found;
  const bool bridge = std::any_of(search.through.begin(), search.through.end(),
                                  [](const auto& v) { return v.empty(); });
  if (!bridge) {
    search.settle.resize(search.chords.size());
    for (int t = 0; t < static_cast<int>(search.tree.size()); ++t) {
      int last = 0;
      for (auto [c, sign] : search.through[t]) last = std::max(last, c);
      search.settle[last].push_back(t);
    }
    for (int x = 1; x < k; ++x) search.candidates.push_back(x);
    for (int x = 1; x < k; ++x) search.candidates.push_back(-x);
    search.value.assign(search.chords.size(), 0);
    if (search.assign(0)) {
      NowhereZeroFlow f;
      f.k = k;
      for (std::size_t c = 0; c < search.chords.size(); ++c)
        f.arcs.push_back({search.chords[c].u, search.chords[c].v, search.value[c]});
      for (int t = 0; t < static_cast<int>(search.tree.size()); ++t) {
        int sum = 0;
        for (auto [c, sign] : search.through[t]) sum += sign * search.value[c];
        f.arcs.push_back({search.tree[t].u, search.tree[t].v, sum});
      }
      f = f.normalized();
      std::sort(f.arcs.begin(), f.arcs.end(), [](const FlowArc& x, const FlowArc& y) {
        return Edge(x.from, x.to) < Edge(y.from, y.to);
      });
      validate(g, f);
      found = std::move(f);
    }
  }
  return finish(std::move(found), counter);
}

}  // namespace banlinial
