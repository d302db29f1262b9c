#pragma once

// The generic circular triangle-free graph C3 and its complement on rational
// points of the circle. Points are measured in turns, so C3 joins two points
// strictly more than a third of a turn apart, and the complement joins
// distinct points at most a third apart.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "circsign/errors.hpp"
#include "circsign/graph.hpp"
#include "circsign/rational.hpp"

namespace circsign {

enum class CircleKind { C3, C3Complement };

inline const Fraction kThird{1, 3};

/// Circular distance in turns, in [0, 1/2].
inline Fraction circ_dist(const RationalAngle& a, const RationalAngle& b) {
  const Fraction d = abs(a.turns() - b.turns());
  const Fraction other = Fraction(1) - d;
  return d < other ? d : other;
}

inline bool adjacent(CircleKind kind, const RationalAngle& a, const RationalAngle& b) {
  if (a == b) return false;
  const Fraction d = circ_dist(a, b);
  return kind == CircleKind::C3 ? d > kThird : d <= kThird;
}

/// Graph on `points` (vertex i is points[i]) under the kind's adjacency.
inline Graph induced_model(CircleKind kind, const std::vector<RationalAngle>& points) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw DuplicatePoint("point " + points[i].str() + " repeated");
      }
      if (adjacent(kind, points[i], points[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<int>(points.size()), edges);
}

/// The four minimal graphs that do not embed into C3.
enum class C3Obstruction { K3, TwoK2PlusK1, C5PlusK1, C6 };

inline std::string to_string(C3Obstruction o) {
  switch (o) {
    case C3Obstruction::K3: return "K3";
    case C3Obstruction::TwoK2PlusK1: return "2K2+K1";
    case C3Obstruction::C5PlusK1: return "C5+K1";
    case C3Obstruction::C6: return "C6";
  }
  return "?";
}

inline Graph obstruction_graph(C3Obstruction o) {
  switch (o) {
    case C3Obstruction::K3:
      return graphs::complete(3);
    case C3Obstruction::TwoK2PlusK1:
      return disjoint_union(disjoint_union(graphs::complete(2), graphs::complete(2)),
                            graphs::complete(1));
    case C3Obstruction::C5PlusK1:
      return disjoint_union(graphs::cycle(5), graphs::complete(1));
    case C3Obstruction::C6:
      return graphs::cycle(6);
  }
  return {};
}

struct C3Verdict {
  bool embeds = true;
  std::optional<C3Obstruction> obstruction;
  std::vector<Vertex> witness;  // obstruction vertex i -> host vertex

  explicit operator bool() const { return embeds; }
};

/// Decides embeddability into C3 by scanning for the four forbidden induced
/// subgraphs.
inline C3Verdict embeds_in_c3(const Graph& g) {
  for (C3Obstruction o : {C3Obstruction::K3, C3Obstruction::TwoK2PlusK1,
                          C3Obstruction::C5PlusK1, C3Obstruction::C6}) {
    if (auto map = contains_induced(g, obstruction_graph(o))) {
      return {false, o, std::move(*map)};
    }
  }
  return {};
}

struct EmbeddingOptions {
  /// Largest grid denominator tried; 0 means 60 * |V(g)|.
  std::int64_t den_cap = 0;
  /// Only use points that are safe to perturb: grid denominators prime to 3
  /// (so no two points are exactly a third apart) and no pentagon anchor
  /// k/5 in the image.
  bool generic = false;
};

namespace detail {

struct GridSearch {
  const Graph& g;
  std::int64_t m;
  bool generic;
  std::vector<Vertex> order;
  std::vector<std::int64_t> pos;
  std::vector<char> taken;

  bool c3_edge(std::int64_t a, std::int64_t b) const {
    std::int64_t d = a > b ? a - b : b - a;
    d = std::min(d, m - d);
    return 3 * d > m;
  }

  bool is_anchor(std::int64_t j) const { return (5 * j) % m == 0; }

  /// A rotation that keeps every point off the pentagon, or -1.
  std::int64_t free_rotation() const {
    for (std::int64_t r = 0; r < m; ++r) {
      bool ok = true;
      for (Vertex v : order) ok = ok && !is_anchor((pos[v] + r) % m);
      if (ok) return r;
    }
    return -1;
  }

  bool place(std::size_t depth, std::int64_t& rotation) {
    if (depth == order.size()) {
      if (!generic) return true;
      rotation = free_rotation();
      return rotation >= 0;
    }
    const Vertex v = order[depth];
    // the grid is rotation invariant, so the first vertex sits at 0
    const std::int64_t hi = depth == 0 ? 1 : m;
    for (std::int64_t j = 0; j < hi; ++j) {
      if (taken[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order[k];
        ok = c3_edge(j, pos[w]) == g.has_edge(v, w);
      }
      if (!ok) continue;
      pos[v] = j;
      taken[j] = 1;
      if (place(depth + 1, rotation)) return true;
      taken[j] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// An injective map V(g) -> angles realizing g as an induced subgraph of C3.
/// Backtracks over uniform grids j/m for m = 1, 2, ... up to the cap,
/// placing vertices by decreasing degree. Returns nothing exactly when g has
/// a forbidden subgraph; throws WitnessSearchExhausted when g embeds but no
/// grid up to the cap works.
inline std::optional<std::vector<RationalAngle>> find_c3_embedding(
    const Graph& g, EmbeddingOptions opts = {}) {
  if (!embeds_in_c3(g)) return std::nullopt;
  const int n = g.order();
  if (n == 0) return std::vector<RationalAngle>{};
  const std::int64_t cap = opts.den_cap > 0 ? opts.den_cap : 60 * static_cast<std::int64_t>(n);

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  for (std::int64_t m = n; m <= cap; ++m) {
    if (opts.generic && m % 3 == 0) continue;
    detail::GridSearch search{g, m, opts.generic, order,
                              std::vector<std::int64_t>(static_cast<std::size_t>(n), 0),
                              std::vector<char>(static_cast<std::size_t>(m), 0)};
    std::int64_t rotation = 0;
    if (!search.place(0, rotation)) continue;
    std::vector<RationalAngle> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) out.emplace_back((search.pos[v] + rotation) % m, m);
    return out;
  }
  throw WitnessSearchExhausted("no grid embedding with denominator <= " +
                               std::to_string(cap));
}

/// The five pentagon anchors 0, 1/5, 2/5, 3/5, 4/5; consecutive anchors are
/// adjacent in the complement of C3.
inline const std::array<RationalAngle, 5>& pentagon() {
  static const std::array<RationalAngle, 5> p{
      RationalAngle(0, 1), RationalAngle(1, 5), RationalAngle(2, 5),
      RationalAngle(3, 5), RationalAngle(4, 5)};
  return p;
}

inline bool is_anchor(const RationalAngle& a) { return a.den() == 1 || a.den() == 5; }

/// Half the smallest gap between a pairwise distance and the 1/3 threshold,
/// over all pairs of `points` together with the pentagon. Moving every point
/// by strictly less than this preserves adjacency in C3 and its complement.
inline Fraction epsilon_bound(const std::vector<RationalAngle>& points) {
  std::vector<RationalAngle> all(points.begin(), points.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) throw DuplicatePoint("point " + all[i].str() + " repeated");
  for (const auto& p : pentagon())
    if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
  std::optional<Fraction> best;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Fraction gap = abs(kThird - circ_dist(all[i], all[j]));
      if (gap == Fraction(0)) {
        throw DegenerateConfiguration(all[i].str() + " and " + all[j].str() +
                                      " are exactly a third of a turn apart");
      }
      if (!best || gap < *best) best = gap;
    }
  }
  return *best * Fraction(1, 2);
}

}  // namespace circsign
