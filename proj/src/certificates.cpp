#include "banlinial/certificates.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "banlinial/errors.hpp"

namespace banlinial {

namespace {

std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

void validate(const CubicGraph& g, const EdgeColouring3& ec) {
  if (static_cast<int>(ec.colour.size()) != g.edge_count())
    throw DomainError("edge colouring does not cover the edge set");
  for (const auto& [e, c] : ec.colour) {
    if (!g.has_edge(e.u, e.v)) throw DomainError("coloured edge " + edge_name(e) + " not in graph");
    if (c < 1 || c > 3) throw DomainError("edge " + edge_name(e) + " has colour outside 1..3");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> seen;
    for (int w : g.neighbours(v)) seen.insert(ec.colour.at(Edge(v, w)));
    if (seen.size() != 3) throw DomainError("colouring is not proper at vertex " + std::to_string(v));
  }
}

NowhereZeroFlow NowhereZeroFlow::normalized() const {
  NowhereZeroFlow out = *this;
  for (FlowArc& a : out.arcs)
    if (a.value < 0) {
      std::swap(a.from, a.to);
      a.value = -a.value;
    }
  return out;
}

void validate(const CubicGraph& g, const NowhereZeroFlow& f) {
  if (f.k < 2) throw DomainError("flow order must be at least 2");
  if (static_cast<int>(f.arcs.size()) != g.edge_count())
    throw DomainError("flow does not cover the edge set");
  std::set<Edge> covered;
  std::vector<long long> balance(g.vertex_count(), 0);
  for (const FlowArc& a : f.arcs) {
    const Edge e(a.from, a.to);
    if (!g.has_edge(a.from, a.to)) throw DomainError("arc " + edge_name(e) + " not in graph");
    if (!covered.insert(e).second) throw DomainError("edge " + edge_name(e) + " carries two arcs");
    if (a.value == 0) throw DomainError("zero flow on edge " + edge_name(e));
    if (a.value >= f.k || a.value <= -f.k)
      throw DomainError("flow value out of range on edge " + edge_name(e));
    balance[a.from] -= a.value;
    balance[a.to] += a.value;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (balance[v] != 0) throw DomainError("flow not conserved at vertex " + std::to_string(v));
}

std::vector<Edge> TreeCycleDecomposition::cycle_edges() const {
  std::vector<Edge> out;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) out.emplace_back(cycle[i], cycle[(i + 1) % len]);
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const CubicGraph& g, const TreeCycleDecomposition& d) {
  const int n = g.vertex_count();
  const int len = static_cast<int>(d.cycle.size());
  if (len < 3) throw DomainError("cycle must have at least 3 vertices");
  if (len != n / 2 + 1)
    throw DomainError("cycle length " + std::to_string(len) + " must be n/2 + 1 = " +
                      std::to_string(n / 2 + 1));
  std::set<int> distinct(d.cycle.begin(), d.cycle.end());
  if (static_cast<int>(distinct.size()) != len) throw DomainError("cycle repeats a vertex");
  const auto ce = d.cycle_edges();
  std::set<Edge> all(ce.begin(), ce.end());
  for (const Edge& e : d.tree_edges)
    if (!all.insert(e).second) throw DomainError("edge " + edge_name(e) + " used twice");
  if (static_cast<int>(all.size()) != g.edge_count())
    throw DomainError("decomposition does not cover the edge set");
  for (const Edge& e : all)
    if (!g.has_edge(e.u, e.v)) throw DomainError("edge " + edge_name(e) + " not in graph");
  const CubicTree t = d.tree(n);
  if (t.size() != n) throw DomainError("tree is not spanning");
  // deg_T + deg_C = 3 forces the cycle through exactly the leaves.
  std::vector<int> leaves = t.leaves();
  std::vector<int> on_cycle(d.cycle.begin(), d.cycle.end());
  std::sort(on_cycle.begin(), on_cycle.end());
  if (leaves != on_cycle) throw InvariantViolation("cycle does not pass through the tree's leaves");
}

void validate_bipartite_complement(const CubicGraph& g, const CubicTree& t) {
  if (t.host_size() != g.vertex_count()) throw DomainError("tree host size differs from graph");
  const auto te = t.edges();
  for (const Edge& e : te)
    if (!g.has_edge(e.u, e.v)) throw DomainError("tree edge " + edge_name(e) + " not in graph");
  if (g.graph().without_edges(te).two_colouring_or_empty().empty())
    throw DomainError("graph minus the tree is not bipartite");
}

}  // namespace banlinial
