#include "banlinial/constructors.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "banlinial/errors.hpp"
#include "banlinial/oracle.hpp"

namespace banlinial {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

Split verified(const CubicGraph& g, Split s, const char* who) {
  require(verify_ban_linial(g, s), std::string(who) + ": output fails the Ban-Linial check");
  return s;
}

Split finish_nearly_external(const CubicGraph& g, const Split& s, const char* who) {
  const SplitReport r = evaluate_split(g, s);
  require(r.disc >= -2 && r.disc <= 2, std::string(who) + ": |disc| exceeds 2");
  require(r.imbalance == 0, std::string(who) + ": not a bisection");
  require(r.is_nearly_external, std::string(who) + ": bisection is not nearly external");
  return verified(g, repair_nearly_external(g, s), who);
}

}  // namespace

OddCycleGadget build_odd_cycle_gadget(int host_n, const std::vector<int>& cycle,
                                      const CherryPair& cherry) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3 || len % 2 == 0) throw DomainError("gadget needs an odd cycle");
  auto pos = [&](int x) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
  };
  const int iv = pos(cherry.u), iv2 = pos(cherry.u2);
  if (iv < 0 || iv2 < 0) throw DomainError("cherry leaves are not on the cycle");
  if (pos(cherry.apex) >= 0) throw DomainError("cherry apex lies on the cycle");

  OddCycleGadget gad;
  gad.v = cherry.u;
  gad.v2 = cherry.u2;
  gad.u = cherry.apex;
  gad.graph = Graph(host_n);
  for (int i = 0; i < len; ++i) gad.graph.add_edge(cycle[i], cycle[(i + 1) % len]);
  gad.graph.add_edge(gad.u, gad.v);
  gad.graph.add_edge(gad.u, gad.v2);

  // Walking away from v, colour X, Y, X, ... starting at r.
  for (int dir : {+1, -1}) {
    Split s(host_n);
    s.assign(gad.v, Side::X);
    for (int step = 1; step < len; ++step) {
      const int x = cycle[((iv + dir * step) % len + len) % len];
      s.assign(x, (step - 1) % 2 == 0 ? Side::X : Side::Y);
    }
    if (s.side(gad.v2) != Side::X) continue;
    s.assign(gad.u, Side::Y);
    gad.r = cycle[((iv + dir) % len + len) % len];
    gad.split = std::move(s);
    break;
  }

  int mono = 0, disc = 0;
  for (const Edge& e : gad.graph.edges()) {
    if (gad.split.side(e.u) != gad.split.side(e.v)) continue;
    ++mono;
    disc += gad.split.side(e.u) == Side::X ? 1 : -1;
    require(e == Edge(gad.v, gad.r), "gadget: stray monochromatic edge");
  }
  require(mono == 1 && disc == 1, "gadget: expected one X-coloured monochromatic edge");
  require(gad.r != gad.u, "gadget: r equals the apex");
  return gad;
}

Split repair_nearly_external(const CubicGraph& g, const Split& s, RepairStats* stats) {
  const SplitReport start = evaluate_split(g, s);
  if (start.imbalance != 0) throw DomainError("repair needs a bisection");
  if (!start.is_nearly_external) throw DomainError("repair needs a nearly external split");

  RepairStats local;
  RepairStats& st = stats ? *stats : local;
  Split cur = s;
  int cut = start.cut_size;
  for (int round = 0; round <= g.edge_count(); ++round) {
    const SplitReport r = evaluate_split(g, cur);
    if (r.is_external) return cur;
    const int y = r.offenders.front();
    Split moved = cur;
    moved.flip(y);
    const SplitReport rm = evaluate_split(g, moved);
    if (rm.is_external) {
      ++st.moves;
      return moved;
    }
    require(rm.offenders.size() == 1, "repair: moving the offender created several offenders");
    const int x = rm.offenders.front();
    require(x != y && moved.side(x) == moved.side(y), "repair: new offender on the wrong side");
    moved.flip(x);
    const SplitReport rs = evaluate_split(g, moved);
    require(rs.imbalance == 0 && rs.is_nearly_external, "repair: swap lost the invariant");
    require(rs.cut_size > cut, "repair: swap did not increase the cut");
    cut = rs.cut_size;
    cur = std::move(moved);
    ++st.swaps;
  }
  throw InvariantViolation("repair: cut bound exceeded");
}

Split solve_tree_bipartite(const CubicGraph& g, const CubicTree& t, Sign eps) {
  const int n = g.vertex_count();
  validate_bipartite_complement(g, t);
  const std::vector<int> colour = g.graph().without_edges(t.edges()).two_colouring_or_empty();

  Split s(n);
  for (int v = 0; v < n; ++v) s.assign(v, colour[v] == 0 ? Side::X : Side::Y);
  if (t.size() >= 4) {
    Split leaves(n);
    for (int v : t.leaves()) leaves.assign(v, s.side(v));
    const Split inner = split_cubic_tree_unrooted(t, leaves, eps);
    // Internal tree vertices are isolated in g - E(t); they take the lemma's colour.
    for (int v : t.internal()) s.assign(v, inner.side(v));
  }
  return finish_nearly_external(g, s, "tree-bipartite");
}

Split solve_tree_cycle(const CubicGraph& g, const TreeCycleDecomposition& d) {
  const int n = g.vertex_count();
  validate(g, d);
  if (n == 4) {
    const OracleReport rep = brute_force_ban_linial(g);
    require(rep.witness.has_value(), "tree-cycle: K4 has no witness");
    return verified(g, *rep.witness, "tree-cycle");
  }
  const CubicTree t = d.tree(n);
  if (d.cycle.size() % 2 == 0) return solve_tree_bipartite(g, t, Sign::Plus);

  const CherryPair cherry = find_cherry_pairs(t).front();
  const OddCycleGadget gad = build_odd_cycle_gadget(n, d.cycle, cherry);

  std::vector<Edge> reduced_edges;
  for (const Edge& e : t.edges())
    if (e.u != gad.v && e.v != gad.v && e.u != gad.v2 && e.v != gad.v2) reduced_edges.push_back(e);
  const CubicTree reduced = CubicTree::from_edges(n, reduced_edges);
  Split leaves(n);
  for (int v : reduced.leaves()) leaves.assign(v, gad.split.side(v));

  const Split part = gad.r == gad.v2
                         ? split_cubic_tree_unrooted(reduced, leaves, Sign::Minus)
                         : split_cubic_tree_rooted(reduced, leaves, gad.r, Sign::Minus);
  Split s = part;
  s.assign(gad.v, Side::X);
  s.assign(gad.v2, Side::X);
  require(s.is_total(), "tree-cycle: combined split is partial");

  const int disc_g = evaluate_split(g, s).disc;
  require(disc_g == discrepancy(reduced.graph(), part) + 1, "tree-cycle: discrepancy not additive");
  return finish_nearly_external(g, s, "tree-cycle");
}

Split split_from_3_edge_colouring(const CubicGraph& g, const EdgeColouring3& ec) {
  validate(g, ec);
  std::vector<Edge> m3;
  for (const auto& [e, c] : ec.colour)
    if (c == 3) m3.push_back(e);
  const std::vector<int> colour = g.graph().without_edges(m3).two_colouring_or_empty();
  require(!colour.empty(), "3-edge-colouring: two colour classes do not form even cycles");
  Split s(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) s.assign(v, colour[v] == 0 ? Side::X : Side::Y);
  const SplitReport r = evaluate_split(g, s);
  require(r.is_external && r.imbalance == 0, "3-edge-colouring: not an external bisection");
  return s;
}

Split flow_to_k_bisection(const CubicGraph& g, const NowhereZeroFlow& flow) {
  validate(g, flow);
  const NowhereZeroFlow f = flow.normalized();
  const int n = g.vertex_count();
  std::vector<int> out_deg(n, 0);
  std::vector<std::vector<int>> succ(n), pred(n);
  for (const FlowArc& a : f.arcs) {
    ++out_deg[a.from];
    succ[a.from].push_back(a.to);
    pred[a.to].push_back(a.from);
  }
  Split s(n);
  for (int v = 0; v < n; ++v) {
    if (out_deg[v] != 1 && out_deg[v] != 2)
      throw DomainError("vertex " + std::to_string(v) + " has out-degree " +
                        std::to_string(out_deg[v]));
    s.assign(v, out_deg[v] == 1 ? Side::X : Side::Y);
  }

  auto reach_all = [n](const std::vector<std::vector<int>>& next) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int w : next[x])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
    }
    return count == n;
  };
  require(reach_all(succ) && reach_all(pred), "flow: orientation is not strongly connected");

  const SplitReport r = evaluate_split(g, s);
  require(r.imbalance == 0, "flow: split is not a bisection");
  const Graph h = induced_mono_graph(g, s);
  for (const auto& comp : h.components()) {
    const Side side = s.side(comp.front());
    int inner_edges = 0, leaving = 0, entering = 0;
    std::vector<char> in(n, 0);
    for (int v : comp) in[v] = 1;
    for (const FlowArc& a : f.arcs) {
      if (in[a.from] && in[a.to]) ++inner_edges;
      if (in[a.from] && !in[a.to]) ++leaving;
      if (!in[a.from] && in[a.to]) ++entering;
    }
    const int size = static_cast<int>(comp.size());
    require(inner_edges == size - 1, "flow: monochromatic component is not a tree");
    require(size <= f.k - 2, "flow: monochromatic component exceeds k - 2 vertices");
    // X components send one arc out and receive |V(H)| + 1; Y mirrors this.
    const int one = side == Side::X ? leaving : entering;
    const int many = side == Side::X ? entering : leaving;
    require(one == 1 && many == size + 1, "flow: component boundary arcs do not balance");
  }
  return s;
}

}  // namespace banlinial
