#pragma once

// Brute-force reference implementations. Each one works from definitions
// only (subsets, all labellings, all switch sets, all refinements) and
// shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "circsign/graph.hpp"
#include "circsign/rational.hpp"
#include "circsign/relalg.hpp"
#include "circsign/signed_graph.hpp"

namespace testsupport::oracle {

using circsign::AtomSet;
using circsign::Edge;
using circsign::Fraction;
using circsign::Graph;
using circsign::Labelling;
using circsign::Network;
using circsign::SignedGraph;
using circsign::Vertex;

/// Vertex subsets whose induced subgraph is a cycle, listed in
/// canonical traversal order: smallest vertex first, smaller neighbour next.
inline std::vector<std::vector<Vertex>> induced_cycles(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) vs.push_back(v);
    bool two_regular = true;
    for (Vertex v : vs) {
      int d = 0;
      for (Vertex w : vs) d += g.has_edge(v, w) ? 1 : 0;
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // walk from the smallest vertex; connected iff the walk covers the set
    std::vector<Vertex> walk{vs[0]};
    Vertex prev = -1;
    Vertex cur = vs[0];
    while (true) {
      Vertex next = -1;
      for (Vertex w : vs) {
        if (w != prev && g.has_edge(cur, w)) {
          next = w;  // first hit is the smaller neighbour at the start
          break;
        }
      }
      if (next == vs[0]) break;
      walk.push_back(next);
      prev = cur;
      cur = next;
    }
    if (walk.size() == vs.size()) out.push_back(std::move(walk));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::vector<Edge> cycle_edges(const std::vector<Vertex>& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

/// Induced containment by trying every ordered subset of the right size.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) vs.push_back(v);
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j)
          ok = g.has_edge(vs[i], vs[j]) == pattern.has_edge(i, j);
      if (ok) return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return false;
}

inline bool has_independent_triple(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c)) return true;
  return false;
}

using Beta = std::function<int(std::size_t cycle_length)>;

inline int anti_even(std::size_t len) { return len == 3 ? 0 : 1; }
inline int even_signable(std::size_t len) { return len == 3 ? 1 : 0; }
inline int odd_signable(std::size_t) { return 1; }

inline int sum_on(const SignedGraph& sg, const std::vector<Vertex>& cycle) {
  int s = 0;
  for (const Edge& e : cycle_edges(cycle)) s ^= sg.labels[sg.graph.edge_index(e.u, e.v)];
  return s;
}

inline bool balancing(const SignedGraph& sg, const Beta& beta) {
  for (const auto& c : induced_cycles(sg.graph))
    if (sum_on(sg, c) != beta(c.size())) return false;
  return true;
}

/// Tries all 2^|E| labellings.
inline bool balanceable(const Graph& g, const Beta& beta) {
  const auto cycles = induced_cycles(g);
  const std::size_t m = g.size();
  std::vector<std::vector<int>> ids;
  for (const auto& c : cycles) {
    std::vector<int> row;
    for (const Edge& e : cycle_edges(c)) row.push_back(g.edge_index(e.u, e.v));
    ids.push_back(std::move(row));
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < cycles.size() && ok; ++i) {
      int s = 0;
      for (int id : ids[i]) s ^= static_cast<int>((x >> id) & 1U);
      ok = s == beta(cycles[i].size());
    }
    if (ok) return true;
  }
  return false;
}

/// Tries all 2^|V| switch sets.
inline bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  const int n = a.graph.order();
  const auto& es = a.graph.edges();
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      const bool cut = ((s >> es[i].u) & 1U) != ((s >> es[i].v) & 1U);
      ok = (a.labels[i] ^ (cut ? 1 : 0)) == b.labels[i];
    }
    if (ok) return true;
  }
  return false;
}

namespace detail {

inline constexpr int kId = 0;
inline constexpr int kN = 1;
inline constexpr int kOne = 3;

/// Accepts one atomic assignment (atom[x][y], symmetric, id on the diagonal).
inline bool atomic_satisfiable(const std::vector<std::vector<int>>& atom) {
  const int n = static_cast<int>(atom.size());
  // id must be an equivalence that does not separate its classes
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (atom[x][y] != kId) continue;
      for (int z = 0; z < n; ++z)
        if (atom[x][z] != atom[y][z]) return false;
    }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    bool fresh = true;
    for (int r : reps) fresh = fresh && atom[r][x] != kId;
    if (fresh) reps.push_back(x);
  }
  const int k = static_cast<int>(reps.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (atom[reps[i]][reps[j]] != kN) edges.emplace_back(i, j);
  Graph g(k, edges);
  Labelling labels;
  for (const Edge& e : g.edges()) labels.push_back(atom[reps[e.u]][reps[e.v]] == kOne ? 1 : 0);
  const SignedGraph sg(std::move(g), std::move(labels));
  return !has_independent_triple(sg.graph) && balancing(sg, anti_even);
}

}  // namespace detail

/// Enumerates every atomic refinement of `net` over the atoms {id, N, 0, 1}.
inline bool nsp_satisfiable(const Network& net) {
  const int n = net.vars();
  for (int x = 0; x < n; ++x)
    if (!net.at(x, x).contains(detail::kId)) return false;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<std::vector<int>> atom(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), detail::kId));
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) return detail::atomic_satisfiable(atom);
    const auto [x, y] = pairs[i];
    for (int a = 0; a < 4; ++a) {
      if (!net.at(x, y).contains(a) || !net.at(y, x).contains(a)) continue;
      atom[x][y] = atom[y][x] = a;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// Tries all |V(h)|^|V(g)| maps.
inline bool homomorphism_exists(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int m = h.order();
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  if (n == 0) return true;
  if (m == 0) return false;
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && h.has_edge(f[e.u], f[e.v]);
    if (ok) return true;
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

/// Every cycle of g (not only induced ones), once per vertex set and
/// rotation class, as vertex sequences starting at their smallest vertex.
inline std::vector<std::vector<Vertex>> all_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex)> dfs = [&](Vertex cur) {
    for (Vertex w : g.neighbors(cur)) {
      if (w == path[0] && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= path[0] || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  return out;
}

/// Circular chromatic number from the acyclic-orientation formula: the
/// minimum over acyclic orientations of the maximum, over cycles and both
/// traversal directions, of |C| / (number of arcs traversed forwards).
/// Independent of homomorphism search; practical up to about 20 edges.
inline Fraction circular_chromatic(const Graph& g) {
  if (g.size() == 0) return Fraction(1);
  const auto cycles = all_cycles(g);
  if (cycles.empty()) return Fraction(2);
  const auto& es = g.edges();
  const std::size_t m = es.size();
  std::optional<Fraction> best;
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << m); ++o) {
    // bit set: arc points from the larger to the smaller endpoint
    auto forward = [&](Vertex a, Vertex b) {
      const int id = g.edge_index(a, b);
      const bool down = (o >> id) & 1U;
      return (a < b) != down;
    };
    // acyclic iff some topological order exists
    std::vector<int> indeg(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : es) ++indeg[forward(e.u, e.v) ? e.v : e.u];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < g.order(); ++v)
      if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      const Vertex v = ready.back();
      ready.pop_back();
      ++seen;
      for (Vertex w : g.neighbors(v))
        if (forward(v, w) && --indeg[w] == 0) ready.push_back(w);
    }
    if (seen != g.order()) continue;
    Fraction worst(0);
    for (const auto& c : cycles) {
      std::int64_t plus = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        plus += forward(c[i], c[(i + 1) % c.size()]) ? 1 : 0;
      const auto len = static_cast<std::int64_t>(c.size());
      const Fraction r1(len, plus);
      const Fraction r2(len, len - plus);
      worst = std::max({worst, r1, r2});
    }
    if (!best || worst < *best) best = worst;
  }
  return *best;
}

}  // namespace testsupport::oracle
