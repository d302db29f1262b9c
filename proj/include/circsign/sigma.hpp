#pragma once

// The universal anti-even-balancing labelling of the complement of C3.
//
// Fix the pentagon P = {0, 1/5, 2/5, 3/5, 4/5} and split the circle into
// C0 (reduced numerator even) and C1 (odd), except that every anchor of P is
// put in C0. Each point x is tied to p_x, its first adjacent anchor, and the
// edge x p_x carries the class of x. Every other label follows from
// triangles summing to zero: labels to the remaining adjacent anchors
// propagate around the pentagon, and a general edge xy is read off a common
// adjacent anchor p as label(xp) + label(yp).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "circsign/circle.hpp"
#include "circsign/errors.hpp"
#include "circsign/rational.hpp"
#include "circsign/signed_graph.hpp"

namespace circsign {

/// The class index of a point: 0 for C0, 1 for C1.
inline std::uint8_t parity_class(const RationalAngle& a) {
  if (is_anchor(a)) return 0;
  return static_cast<std::uint8_t>(a.num() & 1);
}

struct CirclePoint {
  RationalAngle angle;
  std::uint8_t parity = 0;

  CirclePoint() = default;
  explicit CirclePoint(const RationalAngle& a) : angle(a), parity(parity_class(a)) {}

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

/// Index of the first pentagon anchor adjacent to `x` in the complement of C3.
inline int p_anchor(const RationalAngle& x) {
  const auto& p = pentagon();
  for (int i = 0; i < 5; ++i) {
    if (adjacent(CircleKind::C3Complement, x, p[i])) return i;
  }
  // every closed two-thirds arc holds at least three anchors
  throw InternalInvariantViolation("no adjacent anchor for " + x.str());
}

namespace detail {

/// Label of the pentagon edge p^i p^(i+1): only p^3 p^4 carries 1, which the
/// five-cycle needs to sum to 1.
inline std::uint8_t pentagon_label(int i, int j) {
  if ((i + 1) % 5 == j) return i == 3 ? 1 : 0;
  if ((j + 1) % 5 == i) return j == 3 ? 1 : 0;
  throw NotAdjacent("anchors " + std::to_string(i) + " and " + std::to_string(j));
}

/// Labels from a non-anchor point to each pentagon anchor it is adjacent
/// to; entries for non-adjacent anchors are empty.
inline std::array<std::optional<std::uint8_t>, 5> anchor_labels(const RationalAngle& x) {
  const auto& p = pentagon();
  std::array<bool, 5> near{};
  for (int i = 0; i < 5; ++i) near[i] = adjacent(CircleKind::C3Complement, x, p[i]);
  std::array<std::optional<std::uint8_t>, 5> out{};
  const int start = p_anchor(x);
  out[start] = parity_class(x);
  for (int j = start; near[(j + 1) % 5] && !out[(j + 1) % 5]; j = (j + 1) % 5) {
    out[(j + 1) % 5] = *out[j] ^ pentagon_label(j, (j + 1) % 5);
  }
  for (int j = start; near[(j + 4) % 5] && !out[(j + 4) % 5]; j = (j + 4) % 5) {
    out[(j + 4) % 5] = *out[j] ^ pentagon_label((j + 4) % 5, j);
  }
  return out;
}

inline int anchor_index(const RationalAngle& a) {
  const auto& p = pentagon();
  for (int i = 0; i < 5; ++i)
    if (p[i] == a) return i;
  return -1;
}

}  // namespace detail

/// Every anchor index k such that both x and y are adjacent to p^k.
inline std::vector<int> common_anchors(const RationalAngle& x, const RationalAngle& y) {
  std::vector<int> out;
  const auto& p = pentagon();
  for (int k = 0; k < 5; ++k) {
    if (adjacent(CircleKind::C3Complement, x, p[k]) &&
        adjacent(CircleKind::C3Complement, y, p[k])) {
      out.push_back(k);
    }
  }
  return out;
}

/// Label of the edge xy computed through the common anchor p^k.
inline std::uint8_t sigma_edge_via(const RationalAngle& x, const RationalAngle& y, int k) {
  const auto lx = detail::anchor_labels(x);
  const auto ly = detail::anchor_labels(y);
  if (!lx[k] || !ly[k]) throw NotAdjacent("anchor is not a common neighbour");
  return *lx[k] ^ *ly[k];
}

/// True when no pentagon anchor lies exactly a third of a turn from `a`.
/// Rational turns allow such ties, which the labelling cannot absorb: 1/3,
/// 2/3 and the pentagon already admit no anti-even-balancing labelling.
inline bool is_generic(const RationalAngle& a) {
  for (const auto& p : pentagon())
    if (circ_dist(a, p) == kThird) return false;
  return true;
}

/// Label of the edge xy of the complement of C3 under the universal
/// labelling. Both points must be generic and not exactly a third apart.
inline std::uint8_t sigma_edge(const RationalAngle& x, const RationalAngle& y) {
  if (!adjacent(CircleKind::C3Complement, x, y)) {
    throw NotAdjacent(x.str() + " and " + y.str());
  }
  if (!is_generic(x) || !is_generic(y) || circ_dist(x, y) == kThird) {
    throw DegenerateConfiguration(x.str() + " and " + y.str() + " tie at a third of a turn");
  }
  const int ax = detail::anchor_index(x);
  const int ay = detail::anchor_index(y);
  if (ax >= 0 && ay >= 0) return detail::pentagon_label(ax, ay);
  if (ax >= 0) return *detail::anchor_labels(y)[ax];
  if (ay >= 0) return *detail::anchor_labels(x)[ay];
  const auto common = common_anchors(x, y);
  if (common.empty()) throw InternalInvariantViolation("edge without a common anchor");
  return sigma_edge_via(x, y, common.front());
}

/// The finite signed model on `points`: the induced subgraph of the
/// complement of C3, labelled by sigma_edge.
inline SignedGraph sigma_model(const std::vector<RationalAngle>& points) {
  Graph g = induced_model(CircleKind::C3Complement, points);
  Labelling labels;
  labels.reserve(g.size());
  for (const Edge& e : g.edges()) labels.push_back(sigma_edge(points[e.u], points[e.v]));
  return SignedGraph(std::move(g), std::move(labels));
}

namespace detail {

inline std::int64_t floor_times(const Fraction& f, std::int64_t q) {
  const wide_int n = static_cast<wide_int>(f.num()) * q;
  wide_int fl = n / f.den();
  if (n % f.den() != 0 && n < 0) --fl;
  return static_cast<std::int64_t>(fl);
}

/// First reduced fraction j/q, scanning q upward, with |j/q - x| < eps, the
/// requested class, off the pentagon and not in `taken`.
inline RationalAngle nearby_point(const RationalAngle& x, const Fraction& eps,
                                  std::uint8_t parity,
                                  const std::vector<RationalAngle>& taken) {
  const Fraction lo = x.turns() - eps;
  const Fraction hi = x.turns() + eps;
  for (std::int64_t q = 1;; ++q) {
    const std::int64_t j_lo = floor_times(lo, q) + 1;
    for (std::int64_t j = j_lo;; ++j) {
      const Fraction cand(j, q);
      if (!(cand < hi)) break;
      if (cand.den() != q) continue;  // seen at a smaller denominator
      const RationalAngle a(cand);
      if (is_anchor(a) || parity_class(a) != parity) continue;
      if (std::find(taken.begin(), taken.end(), a) != taken.end()) continue;
      return a;
    }
  }
}

/// Moves every point indexed by `moved` to a nearby point of the other
/// class, keeping all points distinct and off the pentagon.
inline std::vector<RationalAngle> perturb_within(const std::vector<RationalAngle>& points,
                                                 const std::vector<std::size_t>& moved,
                                                 const Fraction& eps) {
  std::vector<RationalAngle> out = points;
  std::vector<RationalAngle> taken = points;
  for (const auto& p : pentagon()) taken.push_back(p);
  for (std::size_t idx : moved) {
    const RationalAngle& x = points[idx];
    out[idx] = nearby_point(x, eps, static_cast<std::uint8_t>(1 - parity_class(x)), taken);
    taken.push_back(out[idx]);
  }
  return out;
}

}  // namespace detail

/// Moves the points indexed by `s` within epsilon_bound(points) into the
/// opposite class. The result is adjacency-preserving and carries the
/// labelling switched over `s`. Anchors cannot be moved.
inline std::vector<RationalAngle> perturb(const std::vector<RationalAngle>& points,
                                          const std::vector<std::size_t>& s) {
  const Fraction eps = epsilon_bound(points);
  std::vector<std::size_t> moved;
  for (std::size_t idx : s) {
    if (idx >= points.size()) throw VertexOutOfRange("point index " + std::to_string(idx));
    if (is_anchor(points[idx])) {
      throw DegenerateConfiguration("cannot move pentagon anchor " + points[idx].str());
    }
    moved.push_back(idx);
  }
  std::sort(moved.begin(), moved.end());
  moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
  return detail::perturb_within(points, moved, eps);
}

struct UniversalEmbedOptions {
  std::int64_t den_cap = 0;  // 0: 60 * |V|
};

/// A label-preserving embedding of an anti-even-balanced signed graph with
/// no independent triple into (complement of C3, sigma). Places the
/// complement in C3, finds the switch relating the pulled-back labels to
/// the input, and realizes that switch by perturbation. The result is
/// re-verified before it is returned.
inline std::vector<RationalAngle> universal_embed(const SignedGraph& sg,
                                                  UniversalEmbedOptions opts = {}) {
  const Graph& g = sg.graph;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      for (Vertex c = b + 1; c < g.order(); ++c)
        if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c)) {
          throw NotIndependenceTwo("independent set {" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + "}");
        }
  if (!is_balancing(sg, BalanceRule::anti_even())) {
    throw NotBalanceable("labelling is not anti-even-balancing");
  }
  auto angles = find_c3_embedding(complement(g), {opts.den_cap, true});
  if (!angles) throw InternalInvariantViolation("balanceable graph does not embed");
  const SignedGraph pulled = sigma_model(*angles);
  if (!(pulled.graph == g)) throw InternalInvariantViolation("embedding is not induced");
  const auto s = switching_witness(pulled, sg);
  if (!s) throw InternalInvariantViolation("labellings are not switching equivalent");
  const std::vector<std::size_t> moved(s->begin(), s->end());
  auto out = perturb(*angles, moved);
  if (!(sigma_model(out) == sg)) {
    throw InternalInvariantViolation("perturbed embedding does not reproduce the labels");
  }
  return out;
}

/// A point for the new vertex of `target` realizing its adjacencies and
/// labels against the placed host points. Target vertices 0..k-1 are the
/// host points in order; vertex k is new.
inline RationalAngle extend_3(const std::vector<CirclePoint>& host,
                              const SignedGraph& target) {
  const std::size_t k = host.size();
  const Graph& t = target.graph;
  if (k > 2 || static_cast<std::size_t>(t.order()) != k + 1) {
    throw HostMismatch("need at most two host points and one new vertex");
  }
  for (const auto& h : host) {
    if (h.parity != parity_class(h.angle)) throw HostMismatch("stale parity for " + h.angle.str());
    if (!is_generic(h.angle)) {
      throw DegenerateConfiguration(h.angle.str() + " is a third of a turn from an anchor");
    }
  }
  if (k == 2) {
    if (host[0].angle == host[1].angle) throw DuplicatePoint(host[0].angle.str());
    if (circ_dist(host[0].angle, host[1].angle) == kThird) {
      throw DegenerateConfiguration("host points are a third of a turn apart");
    }
    const bool e = adjacent(CircleKind::C3Complement, host[0].angle, host[1].angle);
    if (e != t.has_edge(0, 1) ||
        (e && sigma_edge(host[0].angle, host[1].angle) != target.label(0, 1))) {
      throw HostMismatch("host points do not realize the target on the host");
    }
  }
  if (t.order() == 3 && t.size() == 3 &&
      (target.labels[0] ^ target.labels[1] ^ target.labels[2]) != 0) {
    throw InconsistentTriangle("triangle labels sum to 1");
  }
  if (t.order() == 3 && t.size() == 0) {
    throw IndependentTriple("the complement of C3 has no independent triple");
  }
  if (k == 0) return RationalAngle(0, 1);

  const auto new_v = static_cast<Vertex>(k);
  std::vector<RationalAngle> fixed;
  for (const auto& h : host) fixed.push_back(h.angle);
  for (const auto& p : pentagon()) fixed.push_back(p);

  const bool both_edges_apart = k == 2 && t.has_edge(0, new_v) && t.has_edge(1, new_v) &&
                                !t.has_edge(0, 1);
  auto wanted = [&](const RationalAngle& u) {
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      if (fixed[i] == u || circ_dist(fixed[i], u) == kThird) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (adjacent(CircleKind::C3Complement, host[i].angle, u) !=
          t.has_edge(static_cast<Vertex>(i), new_v)) {
        return false;
      }
    }
    if (both_edges_apart) {
      const auto have = sigma_edge(host[0].angle, u) ^ sigma_edge(host[1].angle, u);
      const auto need = target.label(0, new_v) ^ target.label(1, new_v);
      if (have != need) return false;
    }
    return true;
  };
  auto labels_match = [&](const RationalAngle& u) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto v = static_cast<Vertex>(i);
      if (adjacent(CircleKind::C3Complement, host[i].angle, u) != t.has_edge(v, new_v)) {
        return false;
      }
      if (t.has_edge(v, new_v) && sigma_edge(host[i].angle, u) != target.label(v, new_v)) {
        return false;
      }
    }
    return true;
  };

  // realizers of an adjacency pattern form arcs of positive length, so the
  // scan terminates well before the bound
  constexpr std::int64_t kScanLimit = 100000;
  for (std::int64_t q = 1; q <= kScanLimit; ++q) {
    for (std::int64_t j = 0; j < q; ++j) {
      if (std::gcd(j, q) != 1) continue;
      const RationalAngle u(j, q);
      if (!wanted(u)) continue;
      if (labels_match(u)) return u;
      // every label from u to the host is wrong: move u into the other class
      std::optional<Fraction> eps;
      for (const auto& f : fixed) {
        const Fraction gap = abs(kThird - circ_dist(f, u));
        if (!eps || gap < *eps) eps = gap;
      }
      std::vector<RationalAngle> pts = fixed;
      pts.push_back(u);
      const auto moved = detail::perturb_within(pts, {pts.size() - 1}, *eps * Fraction(1, 2));
      const RationalAngle out = moved.back();
      if (!labels_match(out)) throw InternalInvariantViolation("switched point has wrong labels");
      return out;
    }
  }
  throw InternalInvariantViolation("no realizing point found");
}

}  // namespace circsign
