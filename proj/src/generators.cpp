#include "banlinial/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <regex>

#include "banlinial/canonical.hpp"
#include "banlinial/errors.hpp"

namespace banlinial {

CubicGraph k4() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return CubicGraph::from_edges(4, e);
}

CubicGraph k33() {
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  return CubicGraph::from_edges(6, e);
}

CubicGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return CubicGraph::from_edges(10, e);
}

CubicGraph prism(int m) {
  if (m < 3) throw DomainError("prism needs m >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back(m + i, m + (i + 1) % m);
    e.emplace_back(i, m + i);
  }
  return CubicGraph::from_edges(2 * m, e);
}

CubicGraph moebius_kantor() {
  std::vector<Edge> e;
  for (int i = 0; i < 8; ++i) {
    e.emplace_back(i, (i + 1) % 8);
    e.emplace_back(i, 8 + i);
    e.emplace_back(8 + i, 8 + (i + 3) % 8);
  }
  return CubicGraph::from_edges(16, e);
}

CubicGraph named_graph(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "k4") return k4();
  if (name == "k33") return k33();
  if (name == "moebius_kantor") return moebius_kantor();
  if (name == "prism") return prism(3);
  static const std::regex prism_re(R"(prism[\(]?(\d+)[\)]?)");
  std::smatch m;
  if (std::regex_match(name, m, prism_re)) return prism(std::stoi(m[1]));
  throw DomainError("unknown graph name '" + name + "'");
}

CubicGraph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw DomainError("random cubic graph needs even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  while (true) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      const int a = points[i], b = points[i + 1];
      if (a == b || g.has_edge(a, b))
        ok = false;
      else
        g.add_edge(a, b);
    }
    if (ok) return CubicGraph(std::move(g));
  }
}

namespace {

// Subdivide e1 with x and e2 with y, then join x and y.
Graph insert_edge(const Graph& g, Edge e1, Edge e2) {
  const int n = g.vertex_count();
  const int x = n, y = n + 1;
  Graph out(n + 2);
  for (const Edge& e : g.edges())
    if (e != e1 && e != e2) out.add_edge(e.u, e.v);
  out.add_edge(e1.u, x);
  out.add_edge(x, e1.v);
  out.add_edge(e2.u, y);
  out.add_edge(y, e2.v);
  out.add_edge(x, y);
  return out;
}

// Replace edge uv by u - c, a diamond on {a, b, c, d} missing cd, and d - v.
Graph insert_diamond(const Graph& g, Edge e) {
  const int n = g.vertex_count();
  const int a = n, b = n + 1, c = n + 2, d = n + 3;
  Graph out(n + 4);
  for (const Edge& f : g.edges())
    if (f != e) out.add_edge(f.u, f.v);
  out.add_edge(e.u, c);
  out.add_edge(c, a);
  out.add_edge(c, b);
  out.add_edge(a, b);
  out.add_edge(a, d);
  out.add_edge(b, d);
  out.add_edge(d, e.v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph out(na + b.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(na + e.u, na + e.v);
  return out;
}

using CodeMap = std::map<std::string, Graph>;

void keep(CodeMap& found, const Graph& g) {
  std::string code = canonical_code(g);
  if (found.count(code)) return;
  found.emplace(std::move(code), relabel(g, canonical_labelling(g)));
}

std::vector<Graph> connected_cubic_raw(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  CodeMap found;
  if (n == 4) {
    keep(found, k4().graph());
  } else if (n > 4) {
    // Every connected cubic graph other than K4 arises from a smaller one by
    // an edge insertion or a diamond insertion, or from two smaller ones
    // joined by a bridge.
    for (const Graph& g : connected_cubic_raw(n - 2)) {
      const auto es = g.edges();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) keep(found, insert_edge(g, es[i], es[j]));
    }
    for (const Graph& g : connected_cubic_raw(n - 4))
      for (const Edge& e : g.edges()) keep(found, insert_diamond(g, e));
    for (int n1 = 4; 2 * n1 <= n - 2; ++n1) {
      const int n2 = n - 2 - n1;
      const auto left = connected_cubic_raw(n1);
      const auto right = connected_cubic_raw(n2);
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = (n1 == n2 ? i : 0); j < right.size(); ++j) {
          const Graph u = disjoint_union(left[i], right[j]);
          for (const Edge& e1 : left[i].edges())
            for (const Edge& e2 : right[j].edges())
              keep(found, insert_edge(u, e1, Edge(n1 + e2.u, n1 + e2.v)));
        }
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  std::lock_guard lock(mu);
  memo[n] = out;
  return out;
}

}  // namespace

std::vector<CubicGraph> all_connected_cubic(int n) {
  if (n < 4 || n % 2 != 0) return {};
  std::vector<CubicGraph> out;
  for (Graph& g : connected_cubic_raw(n)) out.emplace_back(std::move(g));
  return out;
}

std::vector<CubicTree> all_cubic_trees(int n) {
  if (n < 2 || n % 2 != 0) return {};
  std::vector<Graph> level{Graph::from_edges(2, std::vector<Edge>{{0, 1}})};
  for (int size = 4; size <= n; size += 2) {
    CodeMap found;
    for (const Graph& t : level)
      for (int leaf = 0; leaf < t.vertex_count(); ++leaf) {
        if (t.degree(leaf) != 1) continue;
        Graph grown(size);
        for (const Edge& e : t.edges()) grown.add_edge(e.u, e.v);
        grown.add_edge(leaf, size - 2);
        grown.add_edge(leaf, size - 1);
        keep(found, grown);
      }
    level.clear();
    for (auto& [code, g] : found) level.push_back(std::move(g));
  }
  std::vector<CubicTree> out;
  for (const Graph& g : level) {
    const auto es = g.edges();
    out.push_back(CubicTree::from_edges(n, es));
  }
  return out;
}

}  // namespace banlinial
