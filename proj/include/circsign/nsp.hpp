#pragma once

// Network satisfaction for the four-atom algebra on {id, N, 0, 1}: atomic
// networks are signed graphs (N is a non-edge, 0 and 1 are edge labels), and
// a network is satisfiable exactly when some atomic refinement is consistent
// and anti-even-balancing. Certificates are points of the complement of C3
// under the universal labelling.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "circsign/errors.hpp"
#include "circsign/relalg.hpp"
#include "circsign/sigma.hpp"
#include "circsign/signed_graph.hpp"

namespace circsign {

struct Certificate {
  std::vector<CirclePoint> assignment;  // variable -> point
  std::vector<std::vector<int>> merged;  // blocks of variables sharing a point

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// The signed graph of an atomic network whose id atoms sit on the diagonal.
inline SignedGraph network_to_signed(const Network& net) {
  const int n = net.vars();
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::uint8_t>> labelled;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const AtomSet a = net.at(x, y);
      if (a.count() != 1) {
        throw NotAtomic("constraint (" + std::to_string(x) + "," + std::to_string(y) +
                        ") has " + std::to_string(a.count()) + " atoms");
      }
      if ((x == y) != (a.only() == ra56::kId)) {
        throw IdOffDiagonal("pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
      if (x < y && a.only() != ra56::kN) {
        edges.emplace_back(x, y);
        labelled.emplace_back(Edge(x, y), a.only() == ra56::kOne ? 1 : 0);
      }
    }
  }
  Graph g(n, edges);
  Labelling labels(g.size());
  for (const auto& [e, l] : labelled) labels[static_cast<std::size_t>(g.edge_index(e.u, e.v))] = l;
  return SignedGraph(std::move(g), std::move(labels));
}

/// The atom realized by two points of the universal model.
inline Atom realized_atom(const RationalAngle& a, const RationalAngle& b) {
  if (a == b) return ra56::kId;
  if (!adjacent(CircleKind::C3Complement, a, b)) return ra56::kN;
  return sigma_edge(a, b) ? ra56::kOne : ra56::kZero;
}

/// Checks `cert` against `net` using only the universal model.
inline bool verify_certificate(const Network& net, const Certificate& cert) {
  const int n = net.vars();
  if (static_cast<int>(cert.assignment.size()) != n) return false;
  for (const auto& p : cert.assignment) {
    if (p.parity != parity_class(p.angle)) return false;
  }
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < cert.merged.size(); ++b) {
    for (int v : cert.merged[b]) {
      if (v < 0 || v >= n || block[v] >= 0) return false;
      block[v] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (block[x] < 0) return false;
    for (int y = 0; y < n; ++y) {
      const bool same_point = cert.assignment[x].angle == cert.assignment[y].angle;
      if (same_point != (block[x] == block[y])) return false;
      Atom a;
      try {
        a = realized_atom(cert.assignment[x].angle, cert.assignment[y].angle);
      } catch (const DegenerateConfiguration&) {
        return false;
      }
      if (!net.at(x, y).contains(a)) return false;
    }
  }
  return true;
}

namespace detail {

class NspSearch {
 public:
  explicit NspSearch(const RelationAlgebra& ra) : ra_(ra) {}

  std::optional<Network> run(const Network& start) {
    auto net = path_consistency(ra_, start);
    if (!net || !parity_ok(*net)) return std::nullopt;
    return descend(*net);
  }

 private:
  std::optional<Network> descend(const Network& net) {
    const int n = net.vars();
    int bx = -1;
    int by = -1;
    int best = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const int c = net.at(x, y).count();
        if (c > 1 && (bx < 0 || c < best)) {
          bx = x;
          by = y;
          best = c;
        }
      }
    }
    if (bx < 0) {
      return leaf_ok(net) ? std::optional<Network>(net) : std::nullopt;
    }
    const AtomSet choices = net.at(bx, by);
    for (Atom a = 0; a < ra_.atom_count(); ++a) {
      if (!choices.contains(a)) continue;
      Network next = net;
      next.restrict(ra_, bx, by, AtomSet::of(a));
      auto refined = path_consistency(ra_, std::move(next));
      if (!refined || !parity_ok(*refined)) continue;
      if (auto found = descend(*refined)) return found;
    }
    return std::nullopt;
  }

  static bool is_edge(AtomSet a) {
    return a == AtomSet::of(ra56::kZero) || a == AtomSet::of(ra56::kOne);
  }

  /// Anti-even parity on every fully decided induced C4 and C5 among
  /// variables that are decided to be distinct.
  static bool parity_ok(const Network& net) {
    const int n = net.vars();
    std::vector<int> pick;
    auto decided = [&](int x, int y) {
      const AtomSet a = net.at(x, y);
      return a.count() == 1 && a.only() != ra56::kId;
    };
    auto check = [&]() {
      const int k = static_cast<int>(pick.size());
      std::vector<int> deg(static_cast<std::size_t>(k), 0);
      int sum = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          const AtomSet a = net.at(pick[i], pick[j]);
          if (is_edge(a)) {
            ++deg[i];
            ++deg[j];
            sum ^= a.only() == ra56::kOne ? 1 : 0;
          }
        }
      }
      // k vertices all of degree 2 with k edges form a cycle when k <= 5
      // (two disjoint cycles would need at least six vertices)
      for (int d : deg)
        if (d != 2) return true;
      return sum == 1;
    };
    std::function<bool(int)> rec = [&](int from) -> bool {
      if (pick.size() >= 4 && !check()) return false;
      if (pick.size() == 5) return true;
      for (int v = from; v < n; ++v) {
        bool ok = true;
        for (int u : pick) ok = ok && decided(u, v);
        if (!ok) continue;
        pick.push_back(v);
        const bool r = rec(v + 1);
        pick.pop_back();
        if (!r) return false;
      }
      return true;
    };
    return rec(0);
  }

  static bool leaf_ok(const Network& net) {
    const Network q = quotient(net).first;
    return is_balancing(network_to_signed(q), BalanceRule::anti_even());
  }

 public:
  /// Contracts id-related variables of an atomic, path-consistent network.
  /// Returns the contracted network and each variable's class.
  static std::pair<Network, std::vector<int>> quotient(const Network& net) {
    const int n = net.vars();
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = static_cast<int>(reps.size());
      for (int y = x + 1; y < n; ++y)
        if (net.at(x, y) == AtomSet::of(ra56::kId)) cls[y] = cls[x];
      reps.push_back(x);
    }
    Network out(ra_56_65(), static_cast<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        out.set(static_cast<int>(i), static_cast<int>(j), net.at(reps[i], reps[j]));
    return {std::move(out), std::move(cls)};
  }

 private:
  const RelationAlgebra& ra_;
};

}  // namespace detail

/// Decides satisfiability; the certificate is the embedding of the first
/// consistent anti-even-balancing atomic refinement in search order.
inline std::optional<Certificate> nsp_solve(const Network& net) {
  const RelationAlgebra& ra = ra_56_65();
  const int n = net.vars();
  for (int x = 0; x < n; ++x)
    if (!net.at(x, x).contains(ra56::kId)) return std::nullopt;

  detail::NspSearch search(ra);
  const auto atomic = search.run(net);
  if (!atomic) return std::nullopt;

  auto [q, cls] = detail::NspSearch::quotient(*atomic);
  std::vector<RationalAngle> points;
  try {
    points = universal_embed(network_to_signed(q));
  } catch (const WitnessSearchExhausted& e) {
    throw InternalInvariantViolation(std::string("satisfiable refinement has no embedding: ") +
                                     e.what());
  } catch (const NotIndependenceTwo& e) {
    throw InternalInvariantViolation(std::string("refinement is not consistent: ") + e.what());
  } catch (const NotBalanceable& e) {
    throw InternalInvariantViolation(std::string("refinement is not balancing: ") + e.what());
  }

  Certificate cert;
  cert.merged.resize(static_cast<std::size_t>(q.vars()));
  for (int x = 0; x < n; ++x) {
    cert.assignment.emplace_back(points[static_cast<std::size_t>(cls[x])]);
    cert.merged[static_cast<std::size_t>(cls[x])].push_back(x);
  }
  if (!verify_certificate(net, cert)) {
    throw InternalInvariantViolation("solver certificate does not verify");
  }
  return cert;
}

/// As above, for a caller-supplied algebra; only the four-atom algebra on
/// {id, N, 0, 1} has a complete procedure.
inline std::optional<Certificate> nsp_solve(const RelationAlgebra& ra, const Network& net) {
  if (!(ra == ra_56_65())) throw UnsupportedAlgebra("no complete procedure for this algebra");
  return nsp_solve(net);
}

}  // namespace circsign
