#include "banlinial/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "banlinial/errors.hpp"

namespace banlinial {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int a, int b) {
  const int n = vertex_count();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  if (has_edge(a, b))
    throw DomainError("repeated edge " + std::to_string(a) + "-" + std::to_string(b));
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++edge_count_;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  Graph out(vertex_count());
  for (const Edge& e : edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) out.add_edge(e.u, e.v);
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  const int n = vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : adj_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return vertex_count() <= 1 || components().size() == 1; }

std::vector<int> Graph::two_colouring_or_empty() const {
  const int n = vertex_count();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : adj_[x]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[x];
          q.push(w);
        } else if (colour[w] == colour[x]) {
          return {};
        }
      }
    }
  }
  return colour;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

CubicGraph::CubicGraph(Graph g) : g_(std::move(g)) {
  const int n = g_.vertex_count();
  if (n < 4 || n % 2 != 0)
    throw DomainError("cubic graph needs an even vertex count >= 4, got " + std::to_string(n));
  for (int v = 0; v < n; ++v)
    if (g_.degree(v) != 3)
      throw DomainError("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g_.degree(v)) + ", expected 3");
}

int girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : g.neighbours(x)) {
        if (dist[w] == -1) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          q.push(w);
        } else if (parent[x] != w) {
          int len = dist[x] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace banlinial
