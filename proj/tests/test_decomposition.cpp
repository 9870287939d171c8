#include <set>

#include "banlinial/certificates.hpp"
#include "banlinial/decomposition.hpp"
#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "doctest.h"

using namespace banlinial;

namespace {

// Independent re-check of a tree+cycle witness from raw edge sets.
bool decomposition_ok(const CubicGraph& g, const TreeCycleDecomposition& d) {
  const int n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  const std::set<Edge> all(edges.begin(), edges.end());
  std::set<Edge> used;
  std::vector<int> tdeg(n, 0), cdeg(n, 0);
  for (const Edge& e : d.tree_edges) {
    if (!all.count(e) || !used.insert(e).second) return false;
    ++tdeg[e.u];
    ++tdeg[e.v];
  }
  for (const Edge& e : d.cycle_edges()) {
    if (!all.count(e) || !used.insert(e).second) return false;
    ++cdeg[e.u];
    ++cdeg[e.v];
  }
  if (used != all) return false;
  if (static_cast<int>(d.cycle.size()) != n / 2 + 1) return false;
  for (int v = 0; v < n; ++v) {
    if (tdeg[v] != 1 && tdeg[v] != 3) return false;
    if ((tdeg[v] == 1) != (cdeg[v] == 2)) return false;
  }
  return static_cast<int>(d.tree_edges.size()) == n - 1;
}

}  // namespace

TEST_CASE("tree+cycle decomposition: small named graphs") {
  SUBCASE("K4 splits into a star and a triangle") {
    const auto r = find_tree_cycle_decomposition(k4());
    REQUIRE(r.found());
    CHECK(r.witness->cycle.size() == 3);
    CHECK(decomposition_ok(k4(), *r.witness));
    const CubicTree t = r.witness->tree(4);
    CHECK(t.internal().size() == 1);
  }
  SUBCASE("K33, the triangular prism and Petersen have one") {
    for (const CubicGraph& g : {k33(), prism(3), petersen()}) {
      const auto r = find_tree_cycle_decomposition(g);
      REQUIRE(r.found());
      CHECK(decomposition_ok(g, *r.witness));
    }
  }
  SUBCASE("larger prisms have none") {
    for (int m = 4; m <= 6; ++m)
      CHECK(find_tree_cycle_decomposition(prism(m)).outcome == SearchOutcome::None);
  }
  SUBCASE("validate rejects a cycle of the wrong length") {
    TreeCycleDecomposition bad;
    bad.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
    bad.cycle = {1, 2, 3, 1};
    CHECK_THROWS_AS(validate(k4(), bad), DomainError);
  }
}

TEST_CASE("tree+cycle decomposition: budget is reported separately") {
  const auto r = find_tree_cycle_decomposition(moebius_kantor(), SearchBudget{1});
  CHECK(r.outcome == SearchOutcome::BudgetExhausted);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("bipartite-complement tree search") {
  SUBCASE("K33") {
    const auto r = find_cubic_tree_bipartite_complement(k33());
    REQUIRE(r.found());
    CHECK_NOTHROW(validate_bipartite_complement(k33(), *r.witness));
  }
  SUBCASE("prism") {
    const auto r = find_cubic_tree_bipartite_complement(prism(3));
    REQUIRE(r.found());
    CHECK_NOTHROW(validate_bipartite_complement(prism(3), *r.witness));
  }
  SUBCASE("K4: every cubic subtree leaves a triangle") {
    const auto r = find_cubic_tree_bipartite_complement(k4());
    CHECK(r.outcome == SearchOutcome::None);
  }
  SUBCASE("spanning star of K4 is rejected by the validator") {
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK_THROWS_AS(validate_bipartite_complement(k4(), CubicTree::from_edges(4, star)),
                    DomainError);
  }
  SUBCASE("prism tree from the decomposition qualifies") {
    const std::vector<Edge> edges{{0, 3}, {0, 1}, {0, 2}, {3, 4}, {3, 5}};
    CHECK_NOTHROW(validate_bipartite_complement(prism(3), CubicTree::from_edges(6, edges)));
  }
}

TEST_CASE("3-edge-colouring search") {
  SUBCASE("K4 colour classes are its three perfect matchings") {
    const auto r = find_3_edge_colouring(k4());
    REQUIRE(r.found());
    std::map<int, std::set<Edge>> classes;
    for (const auto& [e, c] : r.witness->colour) classes[c].insert(e);
    REQUIRE(classes.size() == 3);
    const std::set<std::set<Edge>> matchings{{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::set<std::set<Edge>> got;
    for (const auto& [c, es] : classes) got.insert(es);
    CHECK(got == matchings);
  }
  SUBCASE("K33, prisms, Moebius-Kantor are colourable") {
    for (const CubicGraph& g : {k33(), prism(3), prism(5), moebius_kantor()}) {
      const auto r = find_3_edge_colouring(g);
      REQUIRE(r.found());
      CHECK_NOTHROW(validate(g, *r.witness));
    }
  }
  SUBCASE("Petersen is not") {
    CHECK(find_3_edge_colouring(petersen()).outcome == SearchOutcome::None);
  }
  SUBCASE("improper colouring is rejected") {
    EdgeColouring3 ec;
    for (const Edge& e : k4().edges()) ec.colour[e] = 1;
    CHECK_THROWS_AS(validate(k4(), ec), DomainError);
  }
}

TEST_CASE("nowhere-zero flow search") {
  CHECK_THROWS_AS(find_nowhere_zero_flow(k4(), 1), DomainError);
  CHECK_THROWS_AS(find_nowhere_zero_flow(k4(), 7), DomainError);

  const auto k4_flow = find_nowhere_zero_flow(k4(), 4);
  REQUIRE(k4_flow.found());
  CHECK_NOTHROW(validate(k4(), *k4_flow.witness));
  for (const FlowArc& a : k4_flow.witness->arcs) CHECK(a.value > 0);

  CHECK(find_nowhere_zero_flow(petersen(), 4).outcome == SearchOutcome::None);
  const auto p5 = find_nowhere_zero_flow(petersen(), 5);
  REQUIRE(p5.found());
  CHECK_NOTHROW(validate(petersen(), *p5.witness));

  // Cubic graphs have no nowhere-zero 2-flow; K4 has no 3-flow either.
  CHECK(find_nowhere_zero_flow(k4(), 2).outcome == SearchOutcome::None);
  CHECK(find_nowhere_zero_flow(k4(), 3).outcome == SearchOutcome::None);

  SUBCASE("a flow breaking conservation is rejected") {
    NowhereZeroFlow f = *k4_flow.witness;
    f.arcs.front().value += 1;
    if (f.arcs.front().value >= f.k) f.arcs.front().value -= 2;
    CHECK_THROWS_AS(validate(k4(), f), DomainError);
  }
}

TEST_CASE("certificate searches over all connected cubic graphs up to 10 vertices") {
  for (int n = 4; n <= 10; n += 2) {
    for (const CubicGraph& g : all_connected_cubic(n)) {
      const auto d = find_tree_cycle_decomposition(g);
      CHECK(d.outcome != SearchOutcome::BudgetExhausted);
      if (d.found()) CHECK(decomposition_ok(g, *d.witness));

      const auto t = find_cubic_tree_bipartite_complement(g);
      CHECK(t.outcome != SearchOutcome::BudgetExhausted);
      if (t.found()) CHECK_NOTHROW(validate_bipartite_complement(g, *t.witness));

      const auto ec = find_3_edge_colouring(g);
      const auto f4 = find_nowhere_zero_flow(g, 4);
      // 3-edge-colourable cubic graphs are exactly those with a nowhere-zero 4-flow.
      CHECK(ec.found() == f4.found());
    }
  }
}
