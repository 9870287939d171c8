#include "banlinial/canonical.hpp"

#include <algorithm>
#include <map>

namespace banlinial {

namespace {

using Partition = std::vector<std::vector<int>>;

// Split cells by (sorted multiset of neighbour cell indices) until stable.
void refine(const Graph& g, Partition& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(n);
  while (true) {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      for (int v : cells[c]) cell_of[v] = c;
    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(g.degree(v));
        for (int w : g.neighbours(v)) sig.push_back(cell_of[w]);
        std::sort(sig.begin(), sig.end());
        groups[std::move(sig)].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::string code_for(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::string code;
  code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code += g.has_edge(order[i], order[j]) ? '1' : '0';
  return code;
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<int> best_order;
  bool found = false;

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const auto& c : cells) order.push_back(c.front());
      std::string code = code_for(g, order);
      if (!found || code < best) {
        best = std::move(code);
        best_order = std::move(order);
        found = true;
      }
      return;
    }
    const auto idx = target - cells.begin();
    for (int v : cells[idx]) {
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cells.size()); ++c) {
        if (c != idx) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      run(std::move(child));
    }
  }
};

Search search(const Graph& g) {
  Search s{g, {}, {}, false};
  Partition start;
  if (g.vertex_count() > 0) {
    // Seed by degree so vertices of different degree never share a cell.
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < g.vertex_count(); ++v) by_degree[g.degree(v)].push_back(v);
    for (auto& [d, vs] : by_degree) start.push_back(std::move(vs));
  }
  s.run(std::move(start));
  return s;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  std::string prefix = std::to_string(g.vertex_count()) + ":";
  return prefix + search(g).best;
}

std::vector<int> canonical_labelling(const Graph& g) {
  Search s = search(g);
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < static_cast<int>(s.best_order.size()); ++i) perm[s.best_order[i]] = i;
  return perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace banlinial
