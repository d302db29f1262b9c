#pragma once

// Circular cliques, graph homomorphisms and the circular chromatic number.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "circsign/circle.hpp"
#include "circsign/errors.hpp"
#include "circsign/graph.hpp"
#include "circsign/rational.hpp"
#include "circsign/signed_graph.hpp"

namespace circsign {

/// K_{p/q}: vertices 0..p-1, ij an edge iff q <= |i - j| <= p - q.
inline Graph circular_clique(int p, int q) {
  if (q < 1 || p < 2 * q) {
    throw BadParameters("circular clique needs p >= 2q >= 2, got " + std::to_string(p) + "/" +
                        std::to_string(q));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (j - i >= q && j - i <= p - q) edges.emplace_back(i, j);
  return Graph(p, edges);
}

namespace detail {

struct HomSearch {
  const Graph& g;
  const Graph& h;
  bool transitive;
  std::vector<Vertex> order;
  std::vector<Vertex> image;
  std::vector<char> first_in_component;

  bool place(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    // on a vertex-transitive target each component can start at vertex 0
    const Vertex hi = transitive && first_in_component[v] ? 1 : h.order();
    for (Vertex t = 0; t < hi; ++t) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (image[w] >= 0 && !h.has_edge(t, image[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = t;
      if (place(depth + 1)) return true;
    }
    image[v] = -1;
    return false;
  }
};

inline std::optional<std::vector<Vertex>> homomorphism(const Graph& g, const Graph& h,
                                                       bool transitive) {
  const int n = g.order();
  if (n == 0) return std::vector<Vertex>{};
  if (h.order() == 0) return std::nullopt;
  // breadth-first order per component so each vertex meets placed neighbours
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<char> first(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    first[root] = 1;
    const std::size_t start = order.size();
    order.push_back(root);
    for (std::size_t head = start; head < order.size(); ++head) {
      for (Vertex w : g.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  HomSearch s{g, h, transitive, std::move(order), std::vector<Vertex>(static_cast<std::size_t>(n), -1),
              std::move(first)};
  if (!s.place(0)) return std::nullopt;
  return s.image;
}

}  // namespace detail

/// An edge-preserving map V(g) -> V(h), not necessarily injective.
inline std::optional<std::vector<Vertex>> find_homomorphism(const Graph& g, const Graph& h) {
  return detail::homomorphism(g, h, false);
}

struct CircularHom {
  int p = 0;
  int q = 0;
  std::vector<Vertex> map;  // vertex -> 0..p-1
};

struct ChiCOptions {
  /// Largest p tried; 0 means max(|V(g)|, 2).
  int max_p = 0;
};

namespace detail {

/// Reduced p/q with 2 <= p <= max_p and p >= 2q, ascending by value then p.
inline std::vector<std::pair<int, int>> circular_parameters(int max_p) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= max_p; ++p)
    for (int q = 1; 2 * q <= p; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const long l = static_cast<long>(a.first) * b.second;
    const long r = static_cast<long>(b.first) * a.second;
    return l != r ? l < r : a.first < b.first;
  });
  return out;
}

inline int resolve_max_p(const Graph& g, const ChiCOptions& opts) {
  return opts.max_p > 0 ? opts.max_p : std::max(g.order(), 2);
}

inline std::optional<CircularHom> first_circular_hom(const Graph& g, int max_p,
                                                     const Fraction& below) {
  for (const auto& [p, q] : circular_parameters(max_p)) {
    if (!(Fraction(p, q) < below)) break;
    if (auto m = homomorphism(g, circular_clique(p, q), true)) return CircularHom{p, q, *m};
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest p/q with g -> K_{p/q} and p <= max_p; 1 for edgeless graphs.
/// Throws WitnessSearchExhausted when no p <= max_p works.
inline Fraction circular_chromatic_number(const Graph& g, ChiCOptions opts = {}) {
  if (g.size() == 0) return Fraction(1);
  const int max_p = detail::resolve_max_p(g, opts);
  for (const auto& [p, q] : detail::circular_parameters(max_p)) {
    if (detail::homomorphism(g, circular_clique(p, q), true)) return Fraction(p, q);
  }
  throw WitnessSearchExhausted("no circular clique with p <= " + std::to_string(max_p));
}

struct ChiCVerdict {
  bool less_than_3 = false;
  std::optional<CircularHom> hom;
  /// Distinct angles for the vertices of g; their C3 model is `supergraph`.
  std::vector<RationalAngle> points;
  Graph supergraph;

  explicit operator bool() const { return less_than_3; }
};

/// Decides chi_c(g) < 3. On success the homomorphism angles k/p are spread
/// into distinct points whose induced C3 model is a triangle-free spanning
/// supergraph of g with an anti-even-balanceable complement.
inline ChiCVerdict chi_c_less_than_3(const Graph& g, ChiCOptions opts = {}) {
  ChiCVerdict out;
  const int n = g.order();
  auto hom = detail::first_circular_hom(g, detail::resolve_max_p(g, opts), Fraction(3));
  if (!hom) return out;

  // edges map to distance >= q/p > 1/3; offsets v * eta keep that strict
  // and separate vertices sharing a colour
  const Fraction slack = Fraction(hom->q, hom->p) - kThird;
  const Fraction step(1, hom->p);
  const Fraction eta = (slack < step ? slack : step) / Fraction(2 * (n + 1));
  for (Vertex v = 0; v < n; ++v) {
    out.points.emplace_back(Fraction(hom->map[v], hom->p) + eta * Fraction(v));
  }
  out.supergraph = induced_model(CircleKind::C3, out.points);
  for (const Edge& e : g.edges()) {
    if (!out.supergraph.has_edge(e.u, e.v)) {
      throw InternalInvariantViolation("spread points lose an edge");
    }
  }
  if (contains_induced(out.supergraph, graphs::complete(3)) ||
      !find_balancing(complement(out.supergraph), BalanceRule::anti_even())) {
    throw InternalInvariantViolation("supergraph witness does not verify");
  }
  out.less_than_3 = true;
  out.hom = std::move(hom);
  return out;
}

}  // namespace circsign
