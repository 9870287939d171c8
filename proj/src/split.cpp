#include "banlinial/split.hpp"

#include <algorithm>

#include "banlinial/errors.hpp"

namespace banlinial {

Split Split::from_x_set(int n, const std::vector<int>& xs) {
  Split s(n);
  for (int v = 0; v < n; ++v) s.assign(v, Side::Y);
  for (int v : xs) {
    if (v < 0 || v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
    s.assign(v, Side::X);
  }
  return s;
}

Split Split::from_string(const std::string& xy) {
  Split s(static_cast<int>(xy.size()));
  for (int v = 0; v < s.size(); ++v) {
    char c = xy[v];
    if (c == 'X' || c == 'x' || c == '0')
      s.assign(v, Side::X);
    else if (c == 'Y' || c == 'y' || c == '1')
      s.assign(v, Side::Y);
    else if (c != '.')
      throw DomainError(std::string("bad split character '") + c + "'");
  }
  return s;
}

Split Split::from_mask(int n, std::uint64_t y_mask) {
  Split s(n);
  for (int v = 0; v < n; ++v) s.assign(v, (y_mask >> v) & 1 ? Side::Y : Side::X);
  return s;
}

bool Split::is_total() const {
  return std::all_of(sides_.begin(), sides_.end(), [](const auto& s) { return s.has_value(); });
}

std::vector<int> Split::domain() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (assigned(v)) out.push_back(v);
  return out;
}

std::vector<int> Split::side_members(Side side) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (sides_[v] == side) out.push_back(v);
  return out;
}

Split Split::swapped() const {
  Split out = *this;
  for (auto& s : out.sides_)
    if (s) s = opposite(*s);
  return out;
}

std::string Split::to_string() const {
  std::string out;
  out.reserve(sides_.size());
  for (const auto& s : sides_) out += s ? side_char(*s) : '.';
  return out;
}

std::uint64_t Split::y_mask() const {
  if (size() > 64) throw DomainError("split too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (int v = 0; v < size(); ++v)
    if (sides_[v] == Side::Y) m |= std::uint64_t{1} << v;
  return m;
}

int discrepancy(const Graph& g, const Split& s) {
  int disc = 0;
  for (const Edge& e : g.edges()) {
    if (!s.assigned(e.u) || !s.assigned(e.v)) continue;
    if (s.side(e.u) != s.side(e.v)) continue;
    disc += s.side(e.u) == Side::X ? 1 : -1;
  }
  return disc;
}

Graph induced_mono_graph(const Graph& g, const Split& s) {
  if (s.size() != g.vertex_count() || !s.is_total())
    throw DomainError("split must be total on the graph's vertices");
  Graph h(g.vertex_count());
  for (const Edge& e : g.edges())
    if (s.side(e.u) == s.side(e.v)) h.add_edge(e.u, e.v);
  return h;
}

SplitReport evaluate_split(const Graph& g, const Split& s) {
  const Graph h = induced_mono_graph(g, s);
  SplitReport r;
  r.is_internal = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    r.imbalance += s.side(v) == Side::X ? 1 : -1;
    // deg_H(v) <= deg_G(v) / 2 and its reverse, kept in integers.
    if (g.degree(v) < 2 * h.degree(v)) r.offenders.push_back(v);
    if (g.degree(v) > 2 * h.degree(v)) r.is_internal = false;
  }
  r.is_external = r.offenders.empty();
  r.is_nearly_external = r.offenders.size() <= 1;
  for (const Edge& e : h.edges()) r.disc += s.side(e.u) == Side::X ? 1 : -1;
  r.cut_size = g.edge_count() - h.edge_count();
  for (const auto& comp : h.components())
    r.max_mono_component = std::max<int>(r.max_mono_component, static_cast<int>(comp.size()));
  return r;
}

SplitReport evaluate_split(const CubicGraph& g, const Split& s) {
  SplitReport r = evaluate_split(g.graph(), s);
  bool shortcut = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int same = 0;
    for (int w : g.neighbours(v)) same += s.side(w) == s.side(v);
    if (same > 1) shortcut = false;
  }
  if (shortcut != r.is_external)
    throw InvariantViolation("cubic externality shortcut disagrees with the general definition");
  return r;
}

bool verify_ban_linial(const CubicGraph& g, const Split& s) {
  const SplitReport r = evaluate_split(g, s);
  return r.is_external && r.imbalance >= -2 && r.imbalance <= 2;
}

}  // namespace banlinial
