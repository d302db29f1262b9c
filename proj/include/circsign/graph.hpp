#pragma once

// Finite simple graphs on dense vertex indices, plus the induced-cycle and
// induced-subgraph primitives the rest of the library is built on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circsign/errors.hpp"

namespace circsign {

using Vertex = int;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a validated graph. Pairs are sorted and deduplicated.
  Graph(int order, std::span<const std::pair<Vertex, Vertex>> pairs)
      : order_(order) {
    if (order < 0) throw VertexOutOfRange("negative order");
    edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= order || b >= order) {
        throw VertexOutOfRange("edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ") with order " +
                               std::to_string(order));
      }
      if (a == b) throw LoopEdge("vertex " + std::to_string(a));
      edges_.emplace_back(a, b);
    }
    finish();
  }

  Graph(int order, std::span<const Edge> edges) : order_(order) {
    if (order < 0) throw VertexOutOfRange("negative order");
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= order) {
        throw VertexOutOfRange("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ")");
      }
      if (e.u == e.v) throw LoopEdge("vertex " + std::to_string(e.u));
    }
    edges_.assign(edges.begin(), edges.end());
    finish();
  }

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges in sorted pair order; an edge's position is its index.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const {
    return edge_id_[index(a, b)] >= 0;
  }

  /// Index of edge ab in `edges()`, or -1.
  int edge_index(Vertex a, Vertex b) const { return edge_id_[index(a, b)]; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }

  void finish() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    const auto n = static_cast<std::size_t>(order_);
    edge_id_.assign(n * n, -1);
    adj_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      edge_id_[index(e.u, e.v)] = static_cast<int>(i);
      edge_id_[index(e.v, e.u)] = static_cast<int>(i);
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> edge_id_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph make_graph(int order,
                        std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(order, pairs);
}

inline Graph make_graph(int order,
                        std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return Graph(order, std::span<const std::pair<Vertex, Vertex>>(
                          pairs.begin(), pairs.size()));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(g.order(), edges);
}

/// Vertices of `h` are shifted by `g.order()`.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) {
    edges.emplace_back(e.u + g.order(), e.v + g.order());
  }
  return Graph(g.order() + h.order(), edges);
}

struct InducedSubgraph {
  Graph graph;
  /// `vertices[i]` is the host vertex behind subgraph vertex i.
  std::vector<Vertex> vertices;
};

/// The subgraph induced by `subset`, with vertices renumbered in the order
/// given.
inline InducedSubgraph induced_subgraph(const Graph& g,
                                        std::span<const Vertex> subset) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Vertex v = subset[i];
    if (v < 0 || v >= g.order()) {
      throw VertexOutOfRange("vertex " + std::to_string(v));
    }
    if (local[v] >= 0) {
      throw VertexOutOfRange("vertex " + std::to_string(v) + " repeated");
    }
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.has_edge(subset[i], subset[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {Graph(static_cast<int>(subset.size()), edges),
          std::vector<Vertex>(subset.begin(), subset.end())};
}

inline InducedSubgraph induced_subgraph(const Graph& g,
                                        std::initializer_list<Vertex> subset) {
  return induced_subgraph(g, std::span<const Vertex>(subset.begin(), subset.size()));
}

/// A chordless cycle of length >= 3, stored rotated so the smallest vertex
/// comes first and its smaller cycle-neighbour second.
class InducedCycle {
 public:
  InducedCycle() = default;

  explicit InducedCycle(std::vector<Vertex> vertices)
      : vertices_(canonicalize(std::move(vertices))) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }

  /// Edges of the cycle in traversal order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    return out;
  }

  /// True iff the vertices form an induced cycle of `g`.
  bool is_induced_in(const Graph& g) const {
    const std::size_t k = vertices_.size();
    if (k < 3) return false;
    for (Vertex v : vertices_) {
      if (v < 0 || v >= g.order()) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (vertices_[i] == vertices_[j]) return false;
        const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
        if (g.has_edge(vertices_[i], vertices_[j]) != consecutive) return false;
      }
    }
    return true;
  }

  /// Sorted by length first, then lexicographically.
  friend auto operator<=>(const InducedCycle& a, const InducedCycle& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const InducedCycle&, const InducedCycle&) = default;

 private:
  static std::vector<Vertex> canonicalize(std::vector<Vertex> vs) {
    if (vs.size() < 2) return vs;
    const auto k = vs.size();
    const auto pos = static_cast<std::size_t>(
        std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::rotate(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(pos), vs.end());
    if (vs[k - 1] < vs[1]) std::reverse(vs.begin() + 1, vs.end());
    return vs;
  }

  std::vector<Vertex> vertices_;
};

namespace detail {

inline void extend_induced_path(const Graph& g, std::vector<Vertex>& path,
                                std::vector<int>& blocked,
                                std::size_t max_len,
                                std::vector<InducedCycle>& out) {
  const Vertex start = path.front();
  const Vertex tail = path.back();
  for (Vertex next : g.neighbors(tail)) {
    if (next <= start || blocked[next] > 0) continue;
    if (path.size() >= 2 && g.has_edge(next, start)) {
      // closes; report each cycle once, in the direction with path[1] < next
      if (path[1] < next) {
        std::vector<Vertex> cyc = path;
        cyc.push_back(next);
        out.emplace_back(std::move(cyc));
      }
      continue;
    }
    if (path.size() + 1 >= max_len) continue;
    // vertices adjacent to `tail` become chords for everything after `next`
    path.push_back(next);
    for (Vertex w : g.neighbors(tail)) ++blocked[w];
    extend_induced_path(g, path, blocked, max_len, out);
    for (Vertex w : g.neighbors(tail)) --blocked[w];
    path.pop_back();
  }
}

}  // namespace detail

/// Every induced cycle of `g` with at most `max_len` vertices, each once in
/// canonical form, sorted. Depth-first path growth with chord pruning: a path
/// v0..vk only extends to vertices with no neighbour among v1..v(k-1).
inline std::vector<InducedCycle> enumerate_induced_cycles(
    const Graph& g, std::optional<std::size_t> max_len = std::nullopt) {
  const std::size_t cap =
      max_len.value_or(static_cast<std::size_t>(g.order()));
  std::vector<InducedCycle> out;
  if (cap < 3) return out;
  std::vector<int> blocked(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex first : g.neighbors(s)) {
      if (first <= s) continue;
      path = {s, first};
      // neighbours of s are handled by the closing check, not by blocking
      blocked[s]++;
      blocked[first]++;
      detail::extend_induced_path(g, path, blocked, cap, out);
      blocked[s]--;
      blocked[first]--;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline bool embed_step(const Graph& g, const Graph& pattern,
                       const std::vector<Vertex>& order, std::size_t depth,
                       std::vector<Vertex>& map, std::vector<char>& used) {
  if (depth == order.size()) return true;
  const Vertex p = order[depth];
  for (Vertex cand = 0; cand < g.order(); ++cand) {
    if (used[cand]) continue;
    if (g.degree(cand) < pattern.degree(p)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const Vertex q = order[k];
      ok = pattern.has_edge(p, q) == g.has_edge(cand, map[q]);
    }
    if (!ok) continue;
    map[p] = cand;
    used[cand] = 1;
    if (embed_step(g, pattern, order, depth + 1, map, used)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace detail

/// An injective map pattern -> g witnessing an induced copy, if any.
/// Plain backtracking; pattern vertices are placed in BFS-ish order of
/// decreasing degree so adjacency checks prune early.
inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g,
                                                           const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  std::vector<Vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(pattern.order()), 0);
  while (static_cast<int>(order.size()) < pattern.order()) {
    // prefer a vertex attached to what is already placed, then high degree
    Vertex best = -1;
    int best_key = -1;
    for (Vertex v = 0; v < pattern.order(); ++v) {
      if (placed[v]) continue;
      int attached = 0;
      for (Vertex w : pattern.neighbors(v)) attached += placed[w];
      const int key = attached * 1024 + pattern.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<Vertex> map(static_cast<std::size_t>(pattern.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  if (detail::embed_step(g, pattern, order, 0, map, used)) return map;
  return std::nullopt;
}

/// Small named graphs used throughout tests, fixtures and the CLI.
namespace graphs {

inline Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

/// C_n on 0..n-1 plus a hub n adjacent to every rim vertex.
inline Graph wheel(int n) {
  std::vector<Edge> e = cycle(n).edges();
  for (int i = 0; i < n; ++i) e.emplace_back(i, n);
  return Graph(n + 1, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace graphs

}  // namespace circsign
