#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "banlinial/constructors.hpp"
#include "banlinial/decomposition.hpp"
#include "banlinial/errors.hpp"
#include "banlinial/generators.hpp"
#include "banlinial/io.hpp"
#include "banlinial/oracle.hpp"
#include "banlinial/solver.hpp"

using namespace banlinial;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<CubicGraph> connected_upto(int max_n) {
  std::vector<CubicGraph> out;
  for (int n = 4; n <= max_n; n += 2)
    for (const CubicGraph& g : all_connected_cubic(n)) out.push_back(g);
  return out;
}

std::vector<CubicGraph> named_corpus() {
  std::vector<CubicGraph> out{k4(), k33(), petersen(), moebius_kantor()};
  for (int m = 3; m <= 6; ++m) out.push_back(prism(m));
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome petersen_claim() {
  const auto t0 = Clock::now();
  const OracleReport r = brute_force_ban_linial(petersen());
  const double secs = seconds_since(t0);
  const auto count = [&](int imb) {
    auto it = r.external_by_imbalance.find(imb);
    return it == r.external_by_imbalance.end() ? std::uint64_t{0} : it->second;
  };
  std::ostringstream d;
  d << "assignments=" << r.assignments << " imbalance0=" << count(0) << " imbalance+2=" << count(2)
    << " imbalance-2=" << count(-2) << " total=" << r.external_total << " time=" << secs << "s";
  const bool pass = count(0) == 0 && count(2) + count(-2) >= 1 && r.conjecture_holds &&
                    r.witness_report && r.witness_report->is_external && secs < 1.0 &&
                    r.assignments == 512;
  return {pass, d.str()};
}

Outcome discrepancy_law() {
  std::vector<CubicGraph> corpus = connected_upto(12);
  for (const CubicGraph& g : named_corpus()) corpus.push_back(g);
  for (std::uint64_t s = 1; s <= 20; ++s) corpus.push_back(random_cubic(16 + 2 * static_cast<int>(s), s));
  std::mt19937_64 rng(20240601);
  int bad_law = 0, bad_implication = 0, small_disc = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const CubicGraph& g = corpus[rng() % corpus.size()];
    const int n = g.vertex_count();
    std::vector<int> xs;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) xs.push_back(v);
    const SplitReport r = evaluate_split(g, Split::from_x_set(n, xs));
    if (3 * r.imbalance != 2 * r.disc) ++bad_law;
    if (std::abs(r.disc) <= 2) {
      ++small_disc;
      if (r.imbalance != 0) ++bad_implication;
    }
  }
  std::ostringstream d;
  d << "pairs=" << trials << " graphs=" << corpus.size() << " law_violations=" << bad_law
    << " small_disc=" << small_disc << " implication_violations=" << bad_implication;
  return {bad_law == 0 && bad_implication == 0, d.str()};
}

Outcome external_is_2_split() {
  std::uint64_t splits = 0, bad = 0;
  int graphs = 0;
  for (const CubicGraph& g : connected_upto(12)) {
    ++graphs;
    const int n = g.vertex_count();
    for_each_external_split(g, [&](std::uint64_t y) {
      ++splits;
      const Split s = Split::from_mask(n, y);
      if (evaluate_split(g, s).max_mono_component > 2) ++bad;
      if (evaluate_split(g, s.swapped()).max_mono_component > 2) ++bad;
    });
  }
  std::ostringstream d;
  d << "graphs=" << graphs << " external_splits=" << 2 * splits << " over_2=" << bad;
  return {bad == 0 && splits > 0, d.str()};
}

Outcome lemma_sweep_criterion() {
  const auto t0 = Clock::now();
  const SweepReport r = lemma_sweep(12, 10);
  std::ostringstream d;
  d << "trees=" << r.trees << " unrooted=" << r.unrooted_cases << " rooted=" << r.rooted_cases
    << " exhaustive_none=" << r.exhaustive_none << " failures=" << r.lemma_failures
    << " fallbacks=" << r.fallbacks << " time=" << seconds_since(t0) << "s";
  for (const auto& f : r.failures) d << " [" << f << "]";
  return {r.ok() && r.unrooted_cases > 0 && r.rooted_cases > 0, d.str()};
}

Outcome theorem_pipelines() {
  std::vector<CubicGraph> corpus = named_corpus();
  for (const CubicGraph& g : connected_upto(14)) corpus.push_back(g);
  int tc = 0, tc_odd = 0, tb = 0, failed = 0, oracle_miss = 0;
  std::string first_failure;
  auto run = [&](const CubicGraph& g, const char* what, const std::function<Split()>& f) {
    try {
      const Split s = f();
      if (!verify_ban_linial(g, s)) {
        ++failed;
        if (first_failure.empty()) first_failure = std::string(what) + " " + emit_graph6(g);
      } else if (g.vertex_count() <= 14 && !oracle_accepts(g, s)) {
        ++oracle_miss;
      }
    } catch (const std::exception& e) {
      ++failed;
      if (first_failure.empty()) first_failure = std::string(what) + " " + emit_graph6(g) + ": " + e.what();
    }
  };
  for (const CubicGraph& g : corpus) {
    const auto d = find_tree_cycle_decomposition(g);
    if (d.found()) {
      ++tc;
      tc_odd += d.witness->cycle.size() % 2;
      run(g, "tree-cycle", [&] { return solve_tree_cycle(g, *d.witness); });
    }
    const auto t = find_cubic_tree_bipartite_complement(g);
    if (t.found()) {
      ++tb;
      for (Sign eps : {Sign::Plus, Sign::Minus})
        run(g, "tree-bipartite", [&] { return solve_tree_bipartite(g, *t.witness, eps); });
    }
  }
  std::ostringstream d;
  d << "graphs=" << corpus.size() << " tree_cycle=" << tc << " (odd " << tc_odd << ")"
    << " tree_bipartite=" << tb << " failures=" << failed << " not_in_oracle=" << oracle_miss;
  if (!first_failure.empty()) d << " first=" << first_failure;
  return {failed == 0 && oracle_miss == 0 && tc > 0 && tb > 0, d.str()};
}

Outcome constructions() {
  std::vector<CubicGraph> corpus = named_corpus();
  for (const CubicGraph& g : connected_upto(14)) corpus.push_back(g);
  int colourable = 0, bad = 0;
  for (const CubicGraph& g : corpus) {
    const auto ec = find_3_edge_colouring(g);
    if (!ec.found()) continue;
    ++colourable;
    const SplitReport r = evaluate_split(g, split_from_3_edge_colouring(g, *ec.witness));
    if (!r.is_external || r.imbalance != 0) ++bad;
  }

  auto k_bisection = [](const CubicGraph& g, int k) {
    const auto f = find_nowhere_zero_flow(g, k);
    if (!f.found()) return false;
    const Split s = flow_to_k_bisection(g, *f.witness);
    const SplitReport r = evaluate_split(g, s);
    const Graph h = induced_mono_graph(g, s);
    for (const auto& comp : h.components()) {
      int inner = 0;
      for (int v : comp) inner += h.degree(v);
      if (inner / 2 != static_cast<int>(comp.size()) - 1) return false;
    }
    return r.imbalance == 0 && r.max_mono_component <= k - 2;
  };
  const bool k4_ok = k_bisection(k4(), 4);
  const bool pet_ok = k_bisection(petersen(), 5);
  const bool pet4_none = find_nowhere_zero_flow(petersen(), 4).outcome == SearchOutcome::None;

  std::ostringstream d;
  d << "colourable=" << colourable << " not_external_bisection=" << bad << " K4_k4_2bisection=" << k4_ok
    << " Petersen_k5_3bisection=" << pet_ok << " Petersen_4flow_none=" << pet4_none;
  return {bad == 0 && colourable > 0 && k4_ok && pet_ok && pet4_none, d.str()};
}

Outcome survey_criterion() {
  std::ostringstream stream;
  for (const CubicGraph& g : connected_upto(12)) stream << emit_graph6(g) << '\n';
  const auto t0 = Clock::now();
  std::string out[2];
  SurveySummary sum[2];
  for (int run = 0; run < 2; ++run) {
    std::istringstream in(stream.str());
    std::ostringstream os;
    SurveyOptions o;
    o.threads = run == 0 ? 1 : 4;
    sum[run] = survey(in, os, o);
    out[run] = os.str();
  }
  std::ostringstream d;
  d << "graphs=" << sum[0].graphs << " solved=" << sum[0].solved << " refuted=" << sum[0].refuted
    << " budget=" << sum[0].budget << " unsolved=" << sum[0].unsolved
    << " deterministic=" << (out[0] == out[1]) << " time=" << seconds_since(t0) << "s";
  for (const auto& [p, c] : sum[0].by_path) d << ' ' << p << '=' << c;
  return {sum[0].refuted == 0 && sum[0].solved == sum[0].graphs && sum[0].graphs == 112 &&
              out[0] == out[1],
          d.str()};
}

Outcome round_trip() {
  std::vector<CubicGraph> corpus = named_corpus();
  for (const CubicGraph& g : connected_upto(14)) corpus.push_back(g);
  for (std::uint64_t s = 1; s <= 50; ++s) corpus.push_back(random_cubic(4 + 2 * static_cast<int>(s), s));
  int bad = 0;
  for (const CubicGraph& g : corpus) {
    const std::string s = emit_graph6(g);
    if (emit_graph6(parse_graph6(s)) != s || !(parse_graph6(s) == g.graph())) ++bad;
    const std::string e = emit_edge_list(g);
    if (emit_edge_list(parse_edge_list(e)) != e || !(parse_edge_list(e) == g.graph())) ++bad;
  }

  const std::vector<std::string> bad_graph6{"", "C", "C~~", "C\x7f", "C ", "D~~", "~?@C~", "~?", "~~?"};
  const std::vector<std::string> bad_edges{"0 1\n1 x\n", "0 0\n", "0 1\n1 0\n", "0 1 2\n", "2\n0 5\n", "0 -3\n"};
  int wrong_class = 0;
  for (const auto& s : bad_graph6) {
    try {
      parse_graph6(s);
      ++wrong_class;
    } catch (const ParseError&) {
    } catch (...) {
      ++wrong_class;
    }
  }
  for (const auto& s : bad_edges) {
    try {
      parse_edge_list(s);
      ++wrong_class;
    } catch (const ParseError& e) {
      if (e.line() == 0) ++wrong_class;
    } catch (...) {
      ++wrong_class;
    }
  }
  try {
    as_cubic(parse_graph6("D~{"));
    ++wrong_class;
  } catch (const ParseError&) {
  }
  std::ostringstream d;
  d << "graphs=" << corpus.size() << " round_trip_failures=" << bad
    << " malformed_cases=" << bad_graph6.size() + bad_edges.size() + 1 << " misclassified=" << wrong_class;
  return {bad == 0 && wrong_class == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Petersen claim", petersen_claim},
      {"2 discrepancy law", discrepancy_law},
      {"3 external implies 2-split", external_is_2_split},
      {"4 lemma sweep", lemma_sweep_criterion},
      {"5 theorem pipelines", theorem_pipelines},
      {"6 edge-colouring and flow constructions", constructions},
      {"7 survey", survey_criterion},
      {"8 round trip", round_trip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
