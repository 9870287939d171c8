#include "banlinial/report.hpp"

#include "banlinial/errors.hpp"
#include "json.hpp"

namespace banlinial {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from(const json& a) {
  std::vector<Edge> es;
  for (const auto& p : a) es.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return es;
}

json split_report_json(const SplitReport& r) {
  return {{"disc", r.disc},
          {"imbalance", r.imbalance},
          {"is_external", r.is_external},
          {"is_internal", r.is_internal},
          {"offenders", r.offenders},
          {"is_nearly_external", r.is_nearly_external},
          {"max_mono_component", r.max_mono_component},
          {"cut_size", r.cut_size}};
}

SplitReport split_report_from(const json& j) {
  SplitReport r;
  r.disc = j.at("disc");
  r.imbalance = j.at("imbalance");
  r.is_external = j.at("is_external");
  r.is_internal = j.at("is_internal");
  r.offenders = j.at("offenders").get<std::vector<int>>();
  r.is_nearly_external = j.at("is_nearly_external");
  r.max_mono_component = j.at("max_mono_component");
  r.cut_size = j.at("cut_size");
  return r;
}

json imbalance_map(const std::map<int, std::uint64_t>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

}  // namespace

bool operator==(const Report& a, const Report& b) {
  auto same_ec = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || x->colour == y->colour;
  };
  auto same_tc = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->tree_edges == y->tree_edges && x->cycle == y->cycle);
  };
  auto same_flow = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->k == y->k && x->arcs == y->arcs);
  };
  return a.schema == b.schema && a.command == b.command && a.graph == b.graph && a.n == b.n &&
         a.status == b.status && a.solver_path == b.solver_path && a.searches == b.searches &&
         a.split == b.split && a.split_report == b.split_report && a.ban_linial == b.ban_linial &&
         same_ec(a.edge_colouring, b.edge_colouring) && same_tc(a.tree_cycle, b.tree_cycle) &&
         a.bipartite_tree == b.bipartite_tree && same_flow(a.flow, b.flow) &&
         a.oracle == b.oracle && a.sweep == b.sweep && a.elapsed_ms == b.elapsed_ms;
}

std::string to_json(const Report& r, int indent) {
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["status"] = r.status;
  if (r.solver_path) j["solver_path"] = *r.solver_path;
  if (!r.searches.empty()) j["searches"] = r.searches;
  if (r.split) j["split"] = r.split->to_string();
  if (r.split_report) j["split_report"] = split_report_json(*r.split_report);
  if (r.ban_linial) j["ban_linial"] = *r.ban_linial;
  if (r.edge_colouring) {
    json a = json::array();
    for (const auto& [e, c] : r.edge_colouring->colour) a.push_back({e.u, e.v, c});
    j["edge_colouring"] = a;
  }
  if (r.tree_cycle)
    j["tree_cycle"] = {{"tree", edges_json(r.tree_cycle->tree_edges)}, {"cycle", r.tree_cycle->cycle}};
  if (r.bipartite_tree) j["bipartite_tree"] = edges_json(*r.bipartite_tree);
  if (r.flow) {
    json a = json::array();
    for (const FlowArc& f : r.flow->arcs) a.push_back({f.from, f.to, f.value});
    j["flow"] = {{"k", r.flow->k}, {"arcs", a}};
  }
  if (r.oracle)
    j["oracle"] = {{"assignments", r.oracle->assignments},
                   {"external_by_imbalance", imbalance_map(r.oracle->external_by_imbalance)},
                   {"external_total", r.oracle->external_total},
                   {"conjecture_holds", r.oracle->conjecture_holds}};
  if (r.sweep)
    j["sweep"] = {{"max_n", r.sweep->max_n},
                  {"rooted_max_n", r.sweep->rooted_max_n},
                  {"trees", r.sweep->trees},
                  {"unrooted_cases", r.sweep->unrooted_cases},
                  {"rooted_cases", r.sweep->rooted_cases},
                  {"exhaustive_none", r.sweep->exhaustive_none},
                  {"lemma_failures", r.sweep->lemma_failures},
                  {"fallbacks", r.sweep->fallbacks},
                  {"failures", r.sweep->failures}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  try {
    Report r;
    r.schema = j.at("schema");
    if (r.schema != kReportSchema)
      throw ParseError("unsupported report schema " + std::to_string(r.schema));
    r.command = j.at("command");
    r.graph = j.at("graph");
    r.n = j.at("n");
    r.status = j.at("status");
    if (j.contains("solver_path")) r.solver_path = j["solver_path"].get<std::string>();
    if (j.contains("searches")) r.searches = j["searches"].get<std::map<std::string, std::string>>();
    if (j.contains("split")) r.split = Split::from_string(j["split"].get<std::string>());
    if (j.contains("split_report")) r.split_report = split_report_from(j["split_report"]);
    if (j.contains("ban_linial")) r.ban_linial = j["ban_linial"].get<bool>();
    if (j.contains("edge_colouring")) {
      EdgeColouring3 ec;
      for (const auto& t : j["edge_colouring"])
        ec.colour[Edge(t.at(0).get<int>(), t.at(1).get<int>())] = t.at(2).get<int>();
      r.edge_colouring = ec;
    }
    if (j.contains("tree_cycle")) {
      TreeCycleDecomposition d;
      d.tree_edges = edges_from(j["tree_cycle"].at("tree"));
      d.cycle = j["tree_cycle"].at("cycle").get<std::vector<int>>();
      r.tree_cycle = d;
    }
    if (j.contains("bipartite_tree")) r.bipartite_tree = edges_from(j["bipartite_tree"]);
    if (j.contains("flow")) {
      NowhereZeroFlow f;
      f.k = j["flow"].at("k");
      for (const auto& t : j["flow"].at("arcs"))
        f.arcs.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
      r.flow = f;
    }
    if (j.contains("oracle")) {
      const json& o = j["oracle"];
      OracleCounts c;
      c.assignments = o.at("assignments");
      for (const auto& [k, v] : o.at("external_by_imbalance").items())
        c.external_by_imbalance[std::stoi(k)] = v.get<std::uint64_t>();
      c.external_total = o.at("external_total");
      c.conjecture_holds = o.at("conjecture_holds");
      r.oracle = c;
    }
    if (j.contains("sweep")) {
      const json& s = j["sweep"];
      TreeSweepCounts c;
      c.max_n = s.at("max_n");
      c.rooted_max_n = s.at("rooted_max_n");
      c.trees = s.at("trees");
      c.unrooted_cases = s.at("unrooted_cases");
      c.rooted_cases = s.at("rooted_cases");
      c.exhaustive_none = s.at("exhaustive_none");
      c.lemma_failures = s.at("lemma_failures");
      c.fallbacks = s.at("fallbacks");
      c.failures = s.at("failures").get<std::vector<std::string>>();
      r.sweep = c;
    }
    r.elapsed_ms = j.at("elapsed_ms");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace banlinial
