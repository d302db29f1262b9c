#pragma once

// Z2 edge labellings, switching, and balanceability against a prescribed
// parity on every induced cycle.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "circsign/errors.hpp"
#include "circsign/gf2.hpp"
#include "circsign/graph.hpp"

namespace circsign {

/// One Z2 label per edge, indexed like `Graph::edges()`.
using Labelling = std::vector<std::uint8_t>;

struct SignedGraph {
  Graph graph;
  Labelling labels;

  SignedGraph() = default;
  SignedGraph(Graph g, Labelling l) : graph(std::move(g)), labels(std::move(l)) {
    if (labels.size() != graph.size()) {
      throw ValidationError("labelling has " + std::to_string(labels.size()) +
                            " entries for " + std::to_string(graph.size()) +
                            " edges");
    }
    for (auto& x : labels) {
      if (x > 1) throw ValidationError("labels must be 0 or 1");
    }
  }

  /// All-zero labelling.
  explicit SignedGraph(Graph g) : graph(std::move(g)), labels(graph.size(), 0) {}

  std::uint8_t label(Vertex a, Vertex b) const {
    const int id = graph.edge_index(a, b);
    if (id < 0) {
      throw NotAdjacent(std::to_string(a) + " and " + std::to_string(b));
    }
    return labels[static_cast<std::size_t>(id)];
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

/// The target parity beta(C) of each induced cycle.
class BalanceRule {
 public:
  enum class Kind { AntiEven, EvenSignable, OddSignable, Explicit };

  static BalanceRule anti_even() { return BalanceRule(Kind::AntiEven); }
  static BalanceRule even_signable() { return BalanceRule(Kind::EvenSignable); }
  static BalanceRule odd_signable() { return BalanceRule(Kind::OddSignable); }
  static BalanceRule explicit_values(std::map<InducedCycle, std::uint8_t> values) {
    BalanceRule r(Kind::Explicit);
    r.values_ = std::move(values);
    return r;
  }

  Kind kind() const { return kind_; }
  bool length_based() const { return kind_ != Kind::Explicit; }

  std::uint8_t operator()(const InducedCycle& c) const {
    switch (kind_) {
      case Kind::AntiEven:
        return c.length() == 3 ? 0 : 1;
      case Kind::EvenSignable:
        return c.length() == 3 ? 1 : 0;
      case Kind::OddSignable:
        return 1;
      case Kind::Explicit:
        break;
    }
    const auto it = values_.find(c);
    if (it == values_.end()) {
      throw RuleIncomplete("no value for an induced cycle of length " +
                           std::to_string(c.length()));
    }
    return it->second;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::AntiEven: return "anti-even";
      case Kind::EvenSignable: return "even-signable";
      case Kind::OddSignable: return "odd-signable";
      case Kind::Explicit: return "explicit";
    }
    return "?";
  }

 private:
  explicit BalanceRule(Kind k) : kind_(k) {}

  Kind kind_;
  std::map<InducedCycle, std::uint8_t> values_;
};

using SwitchSet = std::set<Vertex>;

/// Z2 sum of the labels along `c`.
inline std::uint8_t cycle_sum(const SignedGraph& sg, const InducedCycle& c) {
  if (!c.is_induced_in(sg.graph)) throw NotACycle("not an induced cycle of the graph");
  std::uint8_t sum = 0;
  for (const Edge& e : c.edges()) sum ^= sg.labels[sg.graph.edge_index(e.u, e.v)];
  return sum;
}

/// Flips the label of every edge with exactly one endpoint in `s`.
inline SignedGraph switch_over(const SignedGraph& sg, const SwitchSet& s) {
  std::vector<char> in(static_cast<std::size_t>(sg.graph.order()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= sg.graph.order()) {
      throw VertexOutOfRange("switch vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  SignedGraph out = sg;
  const auto& edges = sg.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in[edges[i].u] != in[edges[i].v]) out.labels[i] ^= 1;
  }
  return out;
}

inline bool is_balancing(const SignedGraph& sg, const BalanceRule& rule) {
  bool ok = true;
  // evaluate the rule on every cycle so partial explicit rules always throw
  for (const InducedCycle& c : enumerate_induced_cycles(sg.graph)) {
    std::uint8_t sum = 0;
    for (const Edge& e : c.edges()) sum ^= sg.labels[sg.graph.edge_index(e.u, e.v)];
    if (sum != rule(c)) ok = false;
  }
  return ok;
}

namespace detail {

inline Gf2System cycle_system(const Graph& g, const BalanceRule& rule) {
  Gf2System sys(g.size());
  for (const InducedCycle& c : enumerate_induced_cycles(g)) {
    BitRow row(g.size());
    for (const Edge& e : c.edges()) row.set(static_cast<std::size_t>(g.edge_index(e.u, e.v)));
    sys.add(std::move(row), rule(c) != 0);
  }
  return sys;
}

inline Labelling to_labelling(const BitRow& x) {
  Labelling l(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) l[i] = x.test(i) ? 1 : 0;
  return l;
}

}  // namespace detail

/// The lexicographically smallest `rule`-balancing labelling, if one exists.
/// One unknown per edge and one equation per induced cycle.
inline std::optional<Labelling> find_balancing(const Graph& g, const BalanceRule& rule) {
  const Gf2System sys = detail::cycle_system(g, rule);
  auto x = sys.solve();
  if (!x) return std::nullopt;
  return detail::to_labelling(*x);
}

/// The unique balancing labelling that agrees with `tree_labels` on a
/// maximal spanning forest `tree_edges`.
inline Labelling tree_extend(const Graph& g, const std::vector<Edge>& tree_edges,
                             const std::vector<std::uint8_t>& tree_labels,
                             const BalanceRule& rule) {
  if (tree_edges.size() != tree_labels.size()) {
    throw NotATree("tree edges and labels differ in length");
  }
  // union-find over the forest: acyclic and spanning every component
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : tree_edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) {
      throw NotATree("tree edge (" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ") is not an edge of the graph");
    }
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) throw NotATree("tree edges contain a cycle");
    parent[a] = b;
  }
  for (const Edge& e : g.edges()) {
    if (find(e.u) != find(e.v)) throw NotATree("tree edges are not a maximal forest");
  }

  Gf2System sys = detail::cycle_system(g, rule);
  if (!sys.consistent()) throw NotBalanceable("graph is not " + rule.name() + " balanceable");
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    BitRow row(g.size());
    row.set(static_cast<std::size_t>(g.edge_index(tree_edges[i].u, tree_edges[i].v)));
    if (!sys.add(std::move(row), tree_labels[i] != 0)) {
      throw InternalInvariantViolation("pinned forest labels contradict the cycle system");
    }
  }
  if (sys.rank() != g.size()) {
    throw InternalInvariantViolation("forest labels do not determine the labelling");
  }
  return detail::to_labelling(*sys.solve());
}

/// Some S with switch_over(a, S) == b, or nothing. Returned sets never
/// contain the smallest vertex of any connected component.
inline std::optional<SwitchSet> switching_witness(const SignedGraph& a,
                                                  const SignedGraph& b) {
  if (!(a.graph == b.graph)) throw GraphMismatch("labellings live on different graphs");
  const Graph& g = a.graph;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] >= 0) continue;
        const int id = g.edge_index(u, w);
        side[w] = side[u] ^ (a.labels[id] ^ b.labels[id]);
        queue.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if ((side[e.u] ^ side[e.v]) != (a.labels[i] ^ b.labels[i])) return std::nullopt;
  }
  SwitchSet s;
  for (Vertex v = 0; v < g.order(); ++v)
    if (side[v] == 1) s.insert(v);
  return s;
}

}  // namespace circsign
