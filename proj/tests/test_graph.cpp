#include <random>

#include "banlinial/canonical.hpp"
#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "banlinial/split.hpp"
#include "doctest.h"

using namespace banlinial;

namespace {

Split random_split(int n, std::mt19937_64& rng) {
  Split s(n);
  for (int v = 0; v < n; ++v) s.assign(v, rng() & 1 ? Side::Y : Side::X);
  return s;
}

int edges_inside(const Graph& g, const Split& s, Side side) {
  int count = 0;
  for (const Edge& e : g.edges()) count += s.side(e.u) == side && s.side(e.v) == side;
  return count;
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 5}}), DomainError);
  CHECK_THROWS_AS(CubicGraph(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})),
                  DomainError);
  CHECK_THROWS_AS(CubicGraph(Graph(6)), DomainError);
}

TEST_CASE("named graphs have the expected shape") {
  const CubicGraph p = petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(girth(p) == 5);
  CHECK(girth(k4()) == 3);
  CHECK(girth(k33()) == 4);
  CHECK(girth(moebius_kantor()) == 6);
  const CubicGraph pr = prism(3);
  CHECK(pr.vertex_count() == 6);
  CHECK(pr.has_edge(0, 1));
  CHECK(pr.has_edge(3, 5));
  CHECK(pr.has_edge(2, 5));
  CHECK(named_graph("prism(5)").vertex_count() == 10);
  CHECK(named_graph("prism7").vertex_count() == 14);
  CHECK_THROWS_AS(named_graph("heawood2"), DomainError);
}

TEST_CASE("random cubic graphs are reproducible") {
  CHECK(random_cubic(12, 1) == random_cubic(12, 1));
  CHECK(random_cubic(30, 7).vertex_count() == 30);
  CHECK_THROWS_AS(random_cubic(11, 1), DomainError);
}

TEST_CASE("connected cubic graph enumeration matches the known counts") {
  // Connected cubic graphs on 4..14 vertices: 1, 2, 5, 19, 85, 509.
  const int expected[] = {1, 2, 5, 19, 85, 509};
  for (int i = 0; i < 6; ++i) {
    const int n = 4 + 2 * i;
    const auto all = all_connected_cubic(n);
    CHECK_MESSAGE(static_cast<int>(all.size()) == expected[i], "n = " << n);
    for (const auto& g : all) CHECK(g.graph().is_connected());
  }
}

TEST_CASE("cubic tree enumeration") {
  // Trees with every degree in {1,3}: 1, 1, 1, 1, 2, 2, 4, 6 for 2..16 vertices.
  const int expected[] = {1, 1, 1, 1, 2, 2, 4, 6};
  for (int i = 0; i < 8; ++i) {
    const int n = 2 + 2 * i;
    const auto trees = all_cubic_trees(n);
    CHECK_MESSAGE(static_cast<int>(trees.size()) == expected[i], "n = " << n);
    for (const auto& t : trees) CHECK(static_cast<int>(t.leaves().size()) == n / 2 + 1);
  }
}

TEST_CASE("canonical code detects isomorphism") {
  const CubicGraph p = petersen();
  std::vector<int> perm{3, 7, 1, 9, 0, 4, 8, 2, 6, 5};
  CHECK(canonical_code(relabel(p, perm)) == canonical_code(p));
  CHECK(canonical_code(prism(5)) != canonical_code(p));
}

TEST_CASE("evaluate_split examples") {
  SUBCASE("K4 bisection") {
    const auto r = evaluate_split(k4(), Split::from_x_set(4, {0, 1}));
    CHECK(r.disc == 0);
    CHECK(r.imbalance == 0);
    CHECK(r.is_external);
    CHECK(r.cut_size == 4);
    CHECK(r.max_mono_component == 2);
  }
  SUBCASE("everything on Y") {
    for (const CubicGraph& g : {k4(), petersen(), prism(4)}) {
      const auto r = evaluate_split(g, Split::from_x_set(g.vertex_count(), {}));
      CHECK_FALSE(r.is_external);
      CHECK(static_cast<int>(r.offenders.size()) == g.vertex_count());
      CHECK(r.disc == -g.edge_count());
      CHECK(r.imbalance == -g.vertex_count());
      CHECK(r.is_internal);
    }
  }
  SUBCASE("Petersen outer versus inner cycle") {
    const auto r = evaluate_split(petersen(), Split::from_x_set(10, {0, 1, 2, 3, 4}));
    CHECK_FALSE(r.is_external);
    CHECK(r.offenders.size() == 10);
    CHECK(r.disc == 0);
    CHECK(r.imbalance == 0);
    CHECK(r.max_mono_component == 5);
  }
  SUBCASE("partial split is rejected") {
    Split s(4);
    s.assign(0, Side::X);
    CHECK_THROWS_AS(evaluate_split(k4(), s), DomainError);
  }
}

TEST_CASE("verify_ban_linial examples") {
  CHECK(verify_ban_linial(k4(), Split::from_x_set(4, {0, 1})));
  CHECK_FALSE(verify_ban_linial(k4(), Split::from_x_set(4, {0})));
  CHECK(verify_ban_linial(k33(), Split::from_x_set(6, {0, 1, 2})));
}

TEST_CASE("induced_mono_graph examples") {
  const Graph h = induced_mono_graph(k4(), Split::from_x_set(4, {0, 1}));
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  const CubicGraph p = petersen();
  CHECK(induced_mono_graph(p, Split::from_x_set(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9})) == p.graph());
  const Graph two_cycles = induced_mono_graph(p, Split::from_x_set(10, {0, 1, 2, 3, 4}));
  CHECK(two_cycles.edge_count() == 10);
  CHECK(two_cycles.components().size() == 2);
  CHECK(girth(two_cycles) == 5);
  for (int v = 0; v < 10; ++v) CHECK(two_cycles.degree(v) == 2);
}

TEST_CASE("split report invariants on random cubic graphs and splits") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 10);
    const CubicGraph g = random_cubic(n, rng());
    const Split s = random_split(n, rng);
    const SplitReport r = evaluate_split(g, s);
    CHECK(3 * r.imbalance == 2 * r.disc);
    if (r.disc >= -2 && r.disc <= 2) CHECK(r.imbalance == 0);
    if (r.is_external) CHECK(r.max_mono_component <= 2);
    CHECK(r.cut_size + edges_inside(g, s, Side::X) + edges_inside(g, s, Side::Y) ==
          g.edge_count());
    CHECK(r.disc == edges_inside(g, s, Side::X) - edges_inside(g, s, Side::Y));
    CHECK(r.is_nearly_external == (r.offenders.size() <= 1));

    const SplitReport sw = evaluate_split(g, s.swapped());
    CHECK(sw.disc == -r.disc);
    CHECK(sw.imbalance == -r.imbalance);
    CHECK(sw.offenders == r.offenders);
    CHECK(sw.is_external == r.is_external);
    CHECK(sw.cut_size == r.cut_size);
    CHECK(sw.max_mono_component == r.max_mono_component);
  }
}

TEST_CASE("non-cubic carrier uses the general externality definition") {
  // Path 0-1-2: with all vertices on X, vertex 1 has mono degree 2 = deg_G.
  const Graph path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto r = evaluate_split(path, Split::from_x_set(3, {0, 1, 2}));
  CHECK(r.offenders == std::vector<int>{0, 1, 2});
  const auto r2 = evaluate_split(path, Split::from_x_set(3, {0, 1}));
  // Vertex 0 has mono degree 1 > 1/2; vertex 1 has 1 = 2/2.
  CHECK(r2.offenders == std::vector<int>{0});
  CHECK(r2.is_nearly_external);
}
