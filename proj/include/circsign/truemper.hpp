#pragma once

// Wheels and three-path configurations, and a balanceability test that only
// looks at those local structures. Detection is exhaustive over vertex
// subsets (O(2^n) with pruning) and meant for graphs of a few dozen vertices
// at most; it exists to cross-check the global GF(2) solver.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "circsign/errors.hpp"
#include "circsign/graph.hpp"
#include "circsign/signed_graph.hpp"

namespace circsign {

struct WheelWitness {
  InducedCycle cycle;
  Vertex hub = -1;
  std::vector<Vertex> spokes;  // sorted

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> vs = cycle.vertices();
    vs.push_back(hub);
    std::sort(vs.begin(), vs.end());
    return vs;
  }

  bool valid_in(const Graph& g) const {
    if (!cycle.is_induced_in(g) || hub < 0 || hub >= g.order()) return false;
    const auto& cv = cycle.vertices();
    if (std::find(cv.begin(), cv.end(), hub) != cv.end()) return false;
    std::vector<Vertex> adj;
    for (Vertex v : cv)
      if (g.has_edge(v, hub)) adj.push_back(v);
    std::sort(adj.begin(), adj.end());
    return adj.size() >= 3 && adj == spokes;
  }
};

/// Three paths P1, P2, P3 (each listed from x_i to y_i) plus the extra edge
/// set E. Case 1 is the theta, case 2 the pyramid, case 3 the prism.
struct ThreePathWitness {
  int kind = 0;
  std::array<std::vector<Vertex>, 3> paths;
  std::vector<Edge> extra_edges;

  std::vector<Vertex> vertices() const {
    std::set<Vertex> s;
    for (const auto& p : paths) s.insert(p.begin(), p.end());
    return {s.begin(), s.end()};
  }

  /// Re-checks every defining condition literally against the induced
  /// subgraph of `g` on `vertices()`.
  bool valid_in(const Graph& g) const {
    const std::vector<Vertex> vs = vertices();
    for (Vertex v : vs)
      if (v < 0 || v >= g.order()) return false;
    auto x = [&](int i) { return paths[i].front(); };
    auto y = [&](int i) { return paths[i].back(); };

    std::set<Edge> path_edges;
    for (const auto& p : paths) {
      if (p.size() < 2) return false;
      std::set<Vertex> distinct(p.begin(), p.end());
      if (distinct.size() != p.size()) return false;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        if (!g.has_edge(p[k], p[k + 1])) return false;
        path_edges.emplace(p[k], p[k + 1]);
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const std::set<Vertex> ends{x(i), x(j), y(i), y(j)};
        for (Vertex v : paths[i]) {
          if (std::find(paths[j].begin(), paths[j].end(), v) != paths[j].end() &&
              !ends.count(v)) {
            return false;
          }
        }
      }
    }
    std::set<Edge> all = path_edges;
    all.insert(extra_edges.begin(), extra_edges.end());
    std::set<Edge> induced;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (g.has_edge(vs[a], vs[b])) induced.emplace(vs[a], vs[b]);
    if (all != induced) return false;

    auto shared = [&](int i, int j) {
      std::set<Vertex> out;
      for (Vertex v : paths[i])
        if (std::find(paths[j].begin(), paths[j].end(), v) != paths[j].end()) out.insert(v);
      return out;
    };
    const std::set<Edge> e_set(extra_edges.begin(), extra_edges.end());
    const bool c1 = x(0) == x(1) && x(1) == x(2) && y(0) == y(1) && y(1) == y(2) &&
                    paths[0].size() >= 3 && paths[1].size() >= 3 &&
                    paths[2].size() >= 3 && e_set.empty();
    const bool c2 = y(0) == y(1) && y(1) == y(2) &&
                    e_set == std::set<Edge>{{x(0), x(1)}, {x(0), x(2)}, {x(1), x(2)}} &&
                    shared(0, 1) == std::set<Vertex>{y(0)} &&
                    shared(0, 2) == std::set<Vertex>{y(0)} &&
                    shared(1, 2) == std::set<Vertex>{y(0)};
    const bool c3 = shared(0, 1).empty() && shared(0, 2).empty() && shared(1, 2).empty() &&
                    e_set == std::set<Edge>{{x(0), x(1)}, {x(0), x(2)}, {x(1), x(2)},
                                            {y(0), y(1)}, {y(0), y(2)}, {y(1), y(2)}};
    if (c1 + c2 + c3 != 1) return false;
    return (kind == 1 && c1) || (kind == 2 && c2) || (kind == 3 && c3);
  }
};

/// Every (induced cycle, hub) pair where the hub sees at least three cycle
/// vertices. Ordered by cycle, then hub.
inline std::vector<WheelWitness> find_wheels(const Graph& g) {
  std::vector<WheelWitness> out;
  for (const InducedCycle& c : enumerate_induced_cycles(g)) {
    std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : c.vertices()) on[v] = 1;
    for (Vertex h = 0; h < g.order(); ++h) {
      if (on[h]) continue;
      std::vector<Vertex> spokes;
      for (Vertex w : g.neighbors(h))
        if (on[w]) spokes.push_back(w);
      if (spokes.size() >= 3) out.push_back({c, h, std::move(spokes)});
    }
  }
  return out;
}

namespace detail {

/// Local view of an induced subgraph on a vertex set with some edges
/// removed; used to peel the path structure out of a 3PC candidate.
class PathPeeler {
 public:
  PathPeeler(const Graph& g, const std::vector<Vertex>& vs,
             const std::vector<Edge>& removed)
      : g_(g), vs_(vs), in_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v : vs) in_[v] = 1;
    for (const Edge& e : removed) removed_.insert(e);
  }

  std::vector<Vertex> nbrs(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(v))
      if (in_[w] && !removed_.count(Edge(v, w))) out.push_back(w);
    return out;
  }

  /// Walks from `from` through `first`, continuing through vertices of
  /// degree 2, until a vertex in `stops` is reached. Returns the path, or
  /// nothing if the walk hits anything else.
  std::optional<std::vector<Vertex>> walk(Vertex from, Vertex first,
                                          const std::set<Vertex>& stops) const {
    std::vector<Vertex> path{from};
    Vertex prev = from;
    Vertex cur = first;
    while (true) {
      path.push_back(cur);
      if (stops.count(cur)) return path;
      const auto n = nbrs(cur);
      if (n.size() != 2 || path.size() > vs_.size()) return std::nullopt;
      const Vertex next = n[0] == prev ? n[1] : n[0];
      prev = cur;
      cur = next;
    }
  }

  /// True iff the paths together use exactly the vertex set.
  bool covers(const std::array<std::vector<Vertex>, 3>& paths) const {
    std::set<Vertex> seen;
    for (const auto& p : paths) seen.insert(p.begin(), p.end());
    return seen.size() == vs_.size();
  }

 private:
  const Graph& g_;
  const std::vector<Vertex>& vs_;
  std::vector<char> in_;
  std::set<Edge> removed_;
};

inline std::optional<ThreePathWitness> theta_on(const Graph& g,
                                                const std::vector<Vertex>& vs,
                                                const std::vector<Vertex>& deg3) {
  if (deg3.size() != 2) return std::nullopt;
  const PathPeeler peel(g, vs, {});
  std::optional<ThreePathWitness> best;
  for (int pick = 0; pick < 2; ++pick) {
    const Vertex x = deg3[pick];
    const Vertex y = deg3[1 - pick];
    if (g.has_edge(x, y)) return std::nullopt;
    ThreePathWitness w;
    w.kind = 1;
    const auto first = peel.nbrs(x);
    bool ok = first.size() == 3;
    for (int i = 0; ok && i < 3; ++i) {
      auto p = peel.walk(x, first[i], {x, y});
      ok = p && p->back() == y;
      if (ok) w.paths[i] = std::move(*p);
    }
    if (!ok || !peel.covers(w.paths)) continue;
    std::sort(w.paths.begin(), w.paths.end());
    if (!best || w.paths < best->paths) best = std::move(w);
  }
  return best;
}

inline std::optional<ThreePathWitness> pyramid_on(const Graph& g,
                                                  const std::vector<Vertex>& vs,
                                                  const std::vector<Vertex>& deg3) {
  if (deg3.size() != 4) return std::nullopt;
  std::optional<ThreePathWitness> best;
  for (int apex = 0; apex < 4; ++apex) {
    std::vector<Vertex> tri;
    for (int k = 0; k < 4; ++k)
      if (k != apex) tri.push_back(deg3[k]);
    if (!g.has_edge(tri[0], tri[1]) || !g.has_edge(tri[0], tri[2]) ||
        !g.has_edge(tri[1], tri[2])) {
      continue;
    }
    const Vertex y = deg3[apex];
    ThreePathWitness w;
    w.kind = 2;
    w.extra_edges = {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}};
    const PathPeeler peel(g, vs, w.extra_edges);
    bool ok = true;
    for (int i = 0; ok && i < 3; ++i) {
      const auto n = peel.nbrs(tri[i]);
      ok = n.size() == 1;
      if (!ok) break;
      auto p = peel.walk(tri[i], n[0], {y, tri[0], tri[1], tri[2]});
      ok = p && p->back() == y;
      if (ok) w.paths[i] = std::move(*p);
    }
    if (!ok || !peel.covers(w.paths)) continue;
    if (!best || w.paths < best->paths) best = std::move(w);
  }
  return best;
}

inline std::optional<ThreePathWitness> prism_on(const Graph& g,
                                                const std::vector<Vertex>& vs,
                                                const std::vector<Vertex>& deg3) {
  if (deg3.size() != 6) return std::nullopt;
  std::optional<ThreePathWitness> best;
  // split the six branch vertices into two triangles; the first triangle
  // holds deg3[0], which also makes it the x side of the canonical form
  for (int a = 1; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      const std::array<Vertex, 3> tx{deg3[0], deg3[a], deg3[b]};
      std::array<Vertex, 3> ty{};
      int k = 0;
      for (int i = 1; i < 6; ++i)
        if (i != a && i != b) ty[k++] = deg3[i];
      auto triangle = [&](const std::array<Vertex, 3>& t) {
        return g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2]);
      };
      if (!triangle(tx) || !triangle(ty)) continue;
      ThreePathWitness w;
      w.kind = 3;
      w.extra_edges = {{tx[0], tx[1]}, {tx[0], tx[2]}, {tx[1], tx[2]},
                       {ty[0], ty[1]}, {ty[0], ty[2]}, {ty[1], ty[2]}};
      std::sort(w.extra_edges.begin(), w.extra_edges.end());
      const PathPeeler peel(g, vs, w.extra_edges);
      const std::set<Vertex> stops{tx[0], tx[1], tx[2], ty[0], ty[1], ty[2]};
      const std::set<Vertex> yside{ty[0], ty[1], ty[2]};
      bool ok = true;
      std::set<Vertex> ends;
      for (int i = 0; ok && i < 3; ++i) {
        const auto n = peel.nbrs(tx[i]);
        ok = n.size() == 1;
        if (!ok) break;
        auto p = peel.walk(tx[i], n[0], stops);
        ok = p && yside.count(p->back()) && ends.insert(p->back()).second;
        if (ok) w.paths[i] = std::move(*p);
      }
      if (!ok || !peel.covers(w.paths)) continue;
      std::sort(w.paths.begin(), w.paths.end());
      if (!best || w.paths < best->paths) best = std::move(w);
    }
  }
  return best;
}

inline void scan_subcubic_sets(const Graph& g, Vertex next, std::vector<Vertex>& chosen,
                               std::vector<int>& inner_degree,
                               std::vector<ThreePathWitness>& out) {
  if (next == g.order()) {
    if (chosen.size() < 4) return;
    std::vector<Vertex> deg3;
    std::size_t deg2 = 0;
    for (Vertex v : chosen) {
      if (inner_degree[v] == 3) {
        deg3.push_back(v);
      } else if (inner_degree[v] == 2) {
        ++deg2;
      } else {
        return;
      }
    }
    if (deg3.size() + deg2 != chosen.size()) return;
    std::optional<ThreePathWitness> w;
    switch (deg3.size()) {
      case 2: w = theta_on(g, chosen, deg3); break;
      case 4: w = pyramid_on(g, chosen, deg3); break;
      case 6: w = prism_on(g, chosen, deg3); break;
      default: break;
    }
    if (w) out.push_back(std::move(*w));
    return;
  }
  // exclude `next`
  scan_subcubic_sets(g, next + 1, chosen, inner_degree, out);
  // include `next` if every chosen vertex stays at degree <= 3
  bool fits = true;
  int own = 0;
  for (Vertex w : g.neighbors(next)) {
    if (w >= next) break;
    if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) continue;
    ++own;
    if (inner_degree[w] >= 3) fits = false;
  }
  if (!fits || own > 3) return;
  for (Vertex w : g.neighbors(next))
    if (w < next && std::find(chosen.begin(), chosen.end(), w) != chosen.end()) ++inner_degree[w];
  inner_degree[next] = own;
  chosen.push_back(next);
  scan_subcubic_sets(g, next + 1, chosen, inner_degree, out);
  chosen.pop_back();
  inner_degree[next] = 0;
  for (Vertex w : g.neighbors(next))
    if (w < next && std::find(chosen.begin(), chosen.end(), w) != chosen.end()) --inner_degree[w];
}

}  // namespace detail

/// Every induced three-path configuration, one canonical (lexicographically
/// least) decomposition per vertex set, sorted by vertex set. Paths always
/// have two distinct endpoints.
///
/// Every 3PC is subcubic with exactly 2, 4 or 6 branch vertices, so the scan
/// only visits vertex sets whose induced maximum degree stays at most 3.
inline std::vector<ThreePathWitness> find_3pcs(const Graph& g) {
  std::vector<ThreePathWitness> out;
  std::vector<Vertex> chosen;
  std::vector<int> inner_degree(static_cast<std::size_t>(g.order()), 0);
  detail::scan_subcubic_sets(g, 0, chosen, inner_degree, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices() < b.vertices();
  });
  return out;
}

/// Balanceability decided only on wheels and three-path configurations.
inline bool truemper_balanceable(const Graph& g, const BalanceRule& rule) {
  if (!rule.length_based()) {
    throw UnsupportedRule("explicit rules do not restrict to subgraphs");
  }
  std::set<std::vector<Vertex>> local;
  for (const auto& w : find_wheels(g)) local.insert(w.vertices());
  for (const auto& w : find_3pcs(g)) local.insert(w.vertices());
  for (const auto& vs : local) {
    const auto sub = induced_subgraph(g, vs);
    if (!find_balancing(sub.graph, rule)) return false;
  }
  return true;
}

}  // namespace circsign
