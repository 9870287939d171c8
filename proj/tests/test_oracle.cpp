#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "banlinial/oracle.hpp"
#include "doctest.h"

using namespace banlinial;

// Counts over all 2^n assignments, keyed by |X| - |Y|; taken from a separate
// plain enumeration script, not from this library.
TEST_CASE("oracle counts") {
  SUBCASE("K4") {
    const OracleReport r = brute_force_ban_linial(k4());
    CHECK(r.assignments == 8);
    CHECK(r.external_by_imbalance == std::map<int, std::uint64_t>{{0, 6}});
    CHECK(r.conjecture_holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_report->imbalance == 0);
  }
  SUBCASE("K33: only the bipartition and its swap") {
    const OracleReport r = brute_force_ban_linial(k33());
    CHECK(r.external_by_imbalance == std::map<int, std::uint64_t>{{0, 2}});
    CHECK(r.witness->to_string() == "XXXYYY");
  }
  SUBCASE("Petersen") {
    const OracleReport r = brute_force_ban_linial(petersen());
    CHECK(r.assignments == 512);
    CHECK(r.external_by_imbalance == std::map<int, std::uint64_t>{{-2, 5}, {2, 5}});
    CHECK(r.external_total == 10);
    CHECK(r.conjecture_holds);
    CHECK(std::abs(r.witness_report->imbalance) == 2);
    CHECK(r.witness_report->is_external);
  }
  SUBCASE("prisms") {
    CHECK(brute_force_ban_linial(prism(3)).external_by_imbalance ==
          std::map<int, std::uint64_t>{{0, 6}});
    CHECK(brute_force_ban_linial(prism(4)).external_by_imbalance ==
          std::map<int, std::uint64_t>{{0, 8}});
  }
}

TEST_CASE("external bisection existence") {
  CHECK(external_bisection_exists(k4()));
  CHECK(external_bisection_exists(k33()));
  CHECK_FALSE(external_bisection_exists(petersen()));
  CHECK_THROWS_AS(external_bisection_exists(petersen(), 8), DomainError);
  CHECK_THROWS_AS(brute_force_ban_linial(random_cubic(26, 1)), DomainError);
}

TEST_CASE("oracle agrees with evaluate_split on every external split") {
  for (int n = 4; n <= 10; n += 2)
    for (const CubicGraph& g : all_connected_cubic(n)) {
      std::uint64_t seen = 0;
      for_each_external_split(g, [&](std::uint64_t y) {
        ++seen;
        const Split s = Split::from_mask(n, y);
        const SplitReport r = evaluate_split(g, s);
        CHECK(r.is_external);
        CHECK(r.max_mono_component <= 2);
        CHECK(oracle_accepts(g, s) == (std::abs(r.imbalance) <= 2));
      });
      CHECK(2 * seen == brute_force_ban_linial(g).external_total);
    }
}

TEST_CASE("oracle_accepts") {
  CHECK(oracle_accepts(k4(), Split::from_x_set(4, {0, 1})));
  CHECK_FALSE(oracle_accepts(k4(), Split::from_x_set(4, {0})));
  CHECK_FALSE(oracle_accepts(k4(), Split(4)));
  CHECK_FALSE(oracle_accepts(k4(), Split::from_x_set(6, {0, 1, 2})));
}

TEST_CASE("lemma sweep") {
  SUBCASE("max_n = 4") {
    const SweepReport r = lemma_sweep(4, 2);
    CHECK(r.ok());
    CHECK(r.unrooted_cases == 16);
  }
  SUBCASE("max_n = 8, rooted 6") {
    const SweepReport r = lemma_sweep(8, 6);
    CHECK(r.ok());
    CHECK(r.fallbacks == 0);
    CHECK(r.rooted_cases > 0);
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(lemma_sweep(16), DomainError);
    CHECK_THROWS_AS(lemma_sweep(2), DomainError);
  }
}

// Total from a separate networkx enumeration over the same graph6 stream.
TEST_CASE("external split total over connected cubic graphs up to 12 vertices") {
  std::uint64_t total = 0;
  for (int n = 4; n <= 12; n += 2)
    for (const CubicGraph& g : all_connected_cubic(n)) total += brute_force_ban_linial(g).external_total;
  CHECK(total == 1884);
}
