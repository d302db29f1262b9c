#pragma once

// Hand-built instances shared by unit and acceptance tests.

#include <map>
#include <utility>
#include <vector>

#include "circsign/graph.hpp"
#include "circsign/relalg.hpp"
#include "circsign/signed_graph.hpp"

namespace testsupport::fixtures {

using circsign::Edge;
using circsign::Graph;
using circsign::Labelling;
using circsign::SignedGraph;
using circsign::Vertex;

/// Rim a..e = 0..4 in cyclic order, hub v = 5.
inline SignedGraph labelled_wheel(const std::vector<Vertex>& spokes,
                                  const std::map<std::pair<Vertex, Vertex>, int>& ones) {
  std::vector<Edge> edges{{0, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}};
  for (Vertex s : spokes) edges.emplace_back(5, s);
  Graph g(6, edges);
  Labelling labels(g.size(), 0);
  for (const auto& [e, l] : ones) {
    labels[static_cast<std::size_t>(g.edge_index(e.first, e.second))] =
        static_cast<std::uint8_t>(l);
  }
  return SignedGraph(std::move(g), std::move(labels));
}

/// Hub on c, b, a; rim edge ed labelled 1.
inline SignedGraph wheel_left() { return labelled_wheel({2, 1, 0}, {{{4, 3}, 1}}); }

/// Hub on d, b, a; unlabelled in the figure.
inline Graph wheel_middle() { return labelled_wheel({3, 1, 0}, {}).graph; }

/// The marked vertices c, e, v of the middle wheel.
inline std::vector<Vertex> wheel_middle_marked() { return {2, 4, 5}; }

/// Hub on c, b, a, d; rim edge ed labelled 1.
inline SignedGraph wheel_right() { return labelled_wheel({2, 1, 0, 3}, {{{4, 3}, 1}}); }

/// The complement of C6 as a network: edges {0}, non-edges {N}, diagonal {id}.
inline circsign::Network prism_network() {
  const auto& ra = circsign::ra_56_65();
  const Graph prism = circsign::complement(circsign::graphs::cycle(6));
  circsign::Network net(ra, 6);
  for (int x = 0; x < 6; ++x) {
    for (int y = x; y < 6; ++y) {
      const circsign::Atom a = x == y                 ? circsign::ra56::kId
                               : prism.has_edge(x, y) ? circsign::ra56::kZero
                                                      : circsign::ra56::kN;
      net.restrict(ra, x, y, circsign::AtomSet::of(a));
    }
  }
  return net;
}

}  // namespace testsupport::fixtures
