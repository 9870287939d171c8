#include "banlinial/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "banlinial/errors.hpp"

namespace banlinial {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) throw ParseError("graph6 character out of range");
  return c - 63;
}

std::string_view trim_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_eol(line);
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) throw ParseError("empty graph6 line");

  std::int64_t n = 0;
  std::size_t pos = 0;
  auto read = [&](int count) {
    if (pos + count > line.size()) throw ParseError("truncated graph6 size field");
    std::int64_t x = 0;
    for (int i = 0; i < count; ++i) x = (x << 6) | sextet(line[pos++]);
    return x;
  };
  if (line[0] != '~') {
    n = read(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = read(6);
    if (n <= 258047) throw ParseError("non-minimal graph6 size field");
  } else {
    pos = 1;
    n = read(3);
    if (n <= 62) throw ParseError("non-minimal graph6 size field");
  }
  if (n > 100000) throw ParseError("graph6 vertex count too large");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != body)
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) +
                     " characters, expected " + std::to_string(body));

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (k % 6 != 0) {
    const int chunk = sextet(line[pos + k / 6]);
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits");
  }
  for (std::size_t i = pos; i < line.size(); ++i) sextet(line[i]);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  std::string out;
  auto put = [&](std::int64_t x, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((x >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put(n, 3);
  } else {
    out += "~~";
    put(n, 6);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  std::vector<std::pair<Edge, int>> edges;
  int max_id = -1;
  int line_no = 0;
  bool seen_data = false;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<long long> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i == line.size()) break;
      long long x = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), x);
      if (ec != std::errc() || x < 0 || x > 1000000)
        throw ParseError("expected a vertex id", line_no);
      const std::size_t next = static_cast<std::size_t>(p - line.data());
      if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r')
        throw ParseError("unexpected character '" + std::string(1, line[next]) + "'", line_no);
      nums.push_back(x);
      i = next;
    }
    if (nums.empty()) continue;
    if (nums.size() == 1 && !seen_data) {
      declared = static_cast<int>(nums[0]);
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (nums.size() != 2) throw ParseError("expected two vertex ids per line", line_no);
    const int u = static_cast<int>(nums[0]), v = static_cast<int>(nums[1]);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
    if (declared && (u >= *declared || v >= *declared))
      throw ParseError("vertex id beyond the declared count " + std::to_string(*declared), line_no);
    max_id = std::max({max_id, u, v});
    edges.push_back({Edge(u, v), line_no});
  }

  Graph g(declared ? *declared : max_id + 1);
  for (const auto& [e, ln] : edges) {
    if (g.has_edge(e.u, e.v))
      throw ParseError("repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v), ln);
    g.add_edge(e.u, e.v);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, const std::optional<Split>& s) {
  if (s && (s->size() != g.vertex_count() || !s->is_total()))
    throw DomainError("DOT split must be total on the graph");
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (s && s->side(v) == Side::X)
      out << " [style=filled, fillcolor=black, fontcolor=white, side=X]";
    else if (s)
      out << " [style=solid, fillcolor=white, fontcolor=black, side=Y]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (s && s->side(e.u) != s->side(e.v)) out << " [style=dashed, color=gray40]";
    else if (s) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

CubicGraph as_cubic(const Graph& g, int line) {
  try {
    return CubicGraph(g);
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a cubic graph: ") + e.what(), line);
  }
}

}  // namespace banlinial
