#include "banlinial/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "banlinial/tree_split.hpp"

namespace banlinial {

namespace {

std::vector<std::uint64_t> neighbour_masks(const CubicGraph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 63)
    throw DomainError("oracle limited to " + std::to_string(max_n) + " vertices, got " +
                      std::to_string(n));
  std::vector<std::uint64_t> nb(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbours(v)) nb[v] |= std::uint64_t{1} << w;
  return nb;
}

// Cubic: external means at most one neighbour on the own side.
bool external_mask(const std::vector<std::uint64_t>& nb, std::uint64_t y, std::uint64_t all) {
  const std::uint64_t x = all & ~y;
  for (std::size_t v = 0; v < nb.size(); ++v) {
    const std::uint64_t own = (y >> v) & 1 ? y : x;
    if (std::popcount(nb[v] & own) > 1) return false;
  }
  return true;
}

int imbalance_of(std::uint64_t y, int n) { return n - 2 * std::popcount(y); }

template <class Visit>
void enumerate(const std::vector<std::uint64_t>& nb, Visit&& visit) {
  const int n = static_cast<int>(nb.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t y = i << 1;
    if (external_mask(nb, y, all) && !visit(y)) return;
  }
}

}  // namespace

OracleReport brute_force_ban_linial(const CubicGraph& g, int max_n) {
  const auto nb = neighbour_masks(g, max_n);
  const int n = g.vertex_count();
  OracleReport rep;
  rep.n = n;
  rep.assignments = std::uint64_t{1} << (n - 1);
  std::optional<std::uint64_t> bisection, near;
  enumerate(nb, [&](std::uint64_t y) {
    const int imb = imbalance_of(y, n);
    ++rep.external_by_imbalance[imb];
    ++rep.external_by_imbalance[-imb];
    rep.external_total += 2;
    if (imb == 0 && !bisection) bisection = y;
    if (std::abs(imb) <= 2 && !near) near = y;
    return true;
  });
  const auto pick = bisection ? bisection : near;
  rep.conjecture_holds = pick.has_value();
  if (pick) {
    rep.witness = Split::from_mask(n, *pick);
    rep.witness_report = evaluate_split(g, *rep.witness);
  }
  return rep;
}

bool external_bisection_exists(const CubicGraph& g, int max_n) {
  const auto nb = neighbour_masks(g, max_n);
  const int n = g.vertex_count();
  bool found = false;
  enumerate(nb, [&](std::uint64_t y) {
    found = imbalance_of(y, n) == 0;
    return !found;
  });
  return found;
}

void for_each_external_split(const CubicGraph& g, const std::function<void(std::uint64_t)>& visit,
                             int max_n) {
  const auto nb = neighbour_masks(g, max_n);
  enumerate(nb, [&](std::uint64_t y) {
    visit(y);
    return true;
  });
}

bool oracle_accepts(const CubicGraph& g, const Split& s) {
  const int n = g.vertex_count();
  if (s.size() != n || !s.is_total() || n > 63) return false;
  std::uint64_t y = 0;
  for (int v = 0; v < n; ++v)
    if (s.side(v) == Side::Y) y |= std::uint64_t{1} << v;
  const auto nb = neighbour_masks(g, 63);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return external_mask(nb, y, all) && std::abs(imbalance_of(y, n)) <= 2;
}

SweepReport lemma_sweep(int max_n, int rooted_max_n) {
  if (max_n < 4 || max_n > 14) throw DomainError("sweep max_n must lie in 4..14");
  if (rooted_max_n < 2 || rooted_max_n > 14) throw DomainError("sweep rooted max_n must lie in 2..14");
  SweepReport rep;
  rep.max_n = max_n;
  rep.rooted_max_n = rooted_max_n;
  TreeSplitOptions opts;
  opts.log_fallbacks = false;
  TreeSplitStats stats;

  auto fail = [&](std::string msg) {
    ++rep.lemma_failures;
    if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
  };
  auto leaf_split_of = [](const CubicTree& t, std::uint64_t mask) {
    Split ls(t.host_size());
    const auto& leaves = t.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i)
      ls.assign(leaves[i], (mask >> i) & 1 ? Side::Y : Side::X);
    return ls;
  };

  const int top = std::max(max_n, rooted_max_n);
  for (int n = 2; n <= top; n += 2) {
    for (const CubicTree& t : all_cubic_trees(n)) {
      ++rep.trees;
      const std::uint64_t splits = std::uint64_t{1} << t.leaves().size();
      for (std::uint64_t mask = 0; mask < splits; ++mask) {
        const Split ls = leaf_split_of(t, mask);
        for (Sign eps : {Sign::Plus, Sign::Minus}) {
          if (n >= 4 && n <= max_n) {
            ++rep.unrooted_cases;
            const Split s = split_cubic_tree_unrooted(t, ls, eps, opts, &stats);
            const LemmaCheck c = check_unrooted(t, ls, s, eps);
            if (!c.ok) fail("unrooted n=" + std::to_string(n) + ": " + c.failure);
            if (!exhaustive_tree_split(t, ls, eps, std::nullopt, max_n)) ++rep.exhaustive_none;
          }
          if (n > rooted_max_n) continue;
          for (int r : t.leaves()) {
            if (ls.side(r) != Side::X) continue;
            ++rep.rooted_cases;
            const Split s = split_cubic_tree_rooted(t, ls, r, eps, opts, &stats);
            const LemmaCheck c = check_rooted(t, ls, s, r, eps);
            if (!c.ok) fail("rooted n=" + std::to_string(n) + ": " + c.failure);
            if (!exhaustive_tree_split(t, ls, eps, r, rooted_max_n)) ++rep.exhaustive_none;
          }
        }
      }
    }
  }
  rep.fallbacks = stats.fallbacks;
  return rep;
}

}  // namespace banlinial
