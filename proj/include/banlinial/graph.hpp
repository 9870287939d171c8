#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace banlinial {

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  int other(int w) const { return w == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted neighbour lists.
// Vertices may have any degree, including 0.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws DomainError on loops, repeated edges, or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const;

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  // Adds an edge; DomainError if it is a loop or already present.
  void add_edge(int a, int b);

  // Same vertex set, only the given edges removed.
  Graph without_edges(std::span<const Edge> removed) const;

  bool is_connected() const;
  // Each component sorted; components ordered by least vertex.
  std::vector<std::vector<int>> components() const;

  // Proper 2-colouring with values 0/1; the least vertex of each component
  // gets 0. Returns an empty vector if the graph has an odd cycle.
  std::vector<int> two_colouring_or_empty() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// A simple 3-regular graph. The constructor validates the invariants.
class CubicGraph {
 public:
  explicit CubicGraph(Graph g);
  static CubicGraph from_edges(int n, std::span<const Edge> edges) {
    return CubicGraph(Graph::from_edges(n, edges));
  }

  const Graph& graph() const { return g_; }
  operator const Graph&() const { return g_; }

  int vertex_count() const { return g_.vertex_count(); }
  int edge_count() const { return g_.edge_count(); }
  const std::vector<int>& neighbours(int v) const { return g_.neighbours(v); }
  bool has_edge(int a, int b) const { return g_.has_edge(a, b); }
  std::vector<Edge> edges() const { return g_.edges(); }

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) { return a.g_ == b.g_; }

 private:
  Graph g_;
};

bool is_cubic(const Graph& g);

// Length of a shortest cycle, 0 for forests.
int girth(const Graph& g);

}  // namespace banlinial
