#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banlinial/graph.hpp"

namespace banlinial {

enum class Side : std::uint8_t { X = 0, Y = 1 };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
inline char side_char(Side s) { return s == Side::X ? 'X' : 'Y'; }

// Two-colouring of (a subset of) the vertices 0..n-1.
class Split {
 public:
  Split() = default;
  explicit Split(int n) : sides_(n) {}

  // Total split with the listed vertices on X and everything else on Y.
  static Split from_x_set(int n, const std::vector<int>& xs);
  // Total split from a string of 'X'/'Y' characters.
  static Split from_string(const std::string& xy);
  // Bit v set means vertex v is on Y.
  static Split from_mask(int n, std::uint64_t y_mask);

  int size() const { return static_cast<int>(sides_.size()); }
  bool assigned(int v) const { return sides_[v].has_value(); }
  Side side(int v) const { return *sides_[v]; }
  const std::optional<Side>& at(int v) const { return sides_[v]; }
  void assign(int v, Side s) { sides_[v] = s; }
  void clear(int v) { sides_[v].reset(); }
  void flip(int v) { sides_[v] = opposite(*sides_[v]); }

  bool is_total() const;
  std::vector<int> domain() const;
  std::vector<int> side_members(Side s) const;
  Split swapped() const;

  // 'X', 'Y', or '.' for unassigned vertices.
  std::string to_string() const;
  std::uint64_t y_mask() const;

  friend bool operator==(const Split&, const Split&) = default;

 private:
  std::vector<std::optional<Side>> sides_;
};

struct SplitReport {
  int disc = 0;        // e(G[X]) - e(G[Y])
  int imbalance = 0;   // |X| - |Y|
  bool is_external = false;
  bool is_internal = false;
  std::vector<int> offenders;  // sorted; deg_G(v) < 2 deg_H(v), H = G - E(X,Y)
  bool is_nearly_external = false;
  int max_mono_component = 0;  // vertices in the largest component of G[X] or G[Y]
  int cut_size = 0;

  friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

// DomainError if the split is not total on g's vertices.
SplitReport evaluate_split(const Graph& g, const Split& s);
// As above, additionally cross-checking the cubic shortcut for externality.
SplitReport evaluate_split(const CubicGraph& g, const Split& s);

// External with |X| - |Y| in {-2, ..., 2}.
bool verify_ban_linial(const CubicGraph& g, const Split& s);

// H = G - E(X,Y): same vertex set, monochromatic edges only.
Graph induced_mono_graph(const Graph& g, const Split& s);

// e(G[X]) - e(G[Y]) over the edges of g whose endpoints are both assigned.
int discrepancy(const Graph& g, const Split& s);

}  // namespace banlinial
