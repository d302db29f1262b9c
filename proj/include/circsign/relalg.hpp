#pragma once

// Finite relation algebras given by their atoms and allowed triples, plus
// networks over them and path consistency. Elements are atom sets.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "circsign/errors.hpp"

namespace circsign {

using Atom = int;

/// Bitmask over the atoms of one algebra.
class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t bits) : bits_(bits) {}
  static constexpr AtomSet of(Atom a) { return AtomSet(std::uint32_t{1} << a); }
  static constexpr AtomSet full(int atom_count) {
    return AtomSet((std::uint32_t{1} << atom_count) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Atom a) const { return (bits_ >> a) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// The single atom of an atomic element.
  Atom only() const { return __builtin_ctz(bits_); }

  constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
  AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(AtomSet, AtomSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Input to make_algebra: atom names, the identity atom, the converse map
/// and the allowed triples (x, y, z), meaning z <= x o y.
struct AlgebraSpec {
  std::vector<std::string> atoms;
  Atom identity = 0;
  std::vector<Atom> converse;
  std::vector<std::array<Atom, 3>> allowed;
};

class RelationAlgebra {
 public:
  int atom_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& atom_names() const { return names_; }
  Atom identity() const { return id_; }
  Atom converse(Atom a) const { return converse_[a]; }

  std::optional<Atom> atom_named(const std::string& name) const {
    for (Atom a = 0; a < atom_count(); ++a)
      if (names_[a] == name) return a;
    return std::nullopt;
  }

  AtomSet top() const { return AtomSet::full(atom_count()); }
  AtomSet id() const { return AtomSet::of(id_); }

  bool allowed(Atom x, Atom y, Atom z) const {
    return table_[static_cast<std::size_t>((x * atom_count() + y))].contains(z);
  }

  /// Atom composition x o y.
  AtomSet compose_atoms(Atom x, Atom y) const {
    return table_[static_cast<std::size_t>(x * atom_count() + y)];
  }

  /// Composition extended additively to atom sets.
  AtomSet compose(AtomSet a, AtomSet b) const {
    AtomSet out;
    for (Atom x = 0; x < atom_count(); ++x) {
      if (!a.contains(x)) continue;
      for (Atom y = 0; y < atom_count(); ++y)
        if (b.contains(y)) out |= compose_atoms(x, y);
    }
    return out;
  }

  AtomSet converse(AtomSet a) const {
    AtomSet out;
    for (Atom x = 0; x < atom_count(); ++x)
      if (a.contains(x)) out |= AtomSet::of(converse_[x]);
    return out;
  }

  AtomSet complement(AtomSet a) const { return AtomSet(top().bits() & ~a.bits()); }

  bool symmetric() const {
    for (Atom a = 0; a < atom_count(); ++a)
      if (converse_[a] != a) return false;
    return true;
  }

  friend bool operator==(const RelationAlgebra& a, const RelationAlgebra& b) {
    return a.names_ == b.names_ && a.id_ == b.id_ && a.converse_ == b.converse_ &&
           a.table_ == b.table_;
  }

  friend RelationAlgebra make_algebra(const AlgebraSpec& spec);

 private:
  std::vector<std::string> names_;
  Atom id_ = 0;
  std::vector<Atom> converse_;
  std::vector<AtomSet> table_;  // [x * n + y] = x o y
};

/// Validates the atom table against the relation algebra axioms: converse
/// is an involution fixing the identity, allowed triples are closed under
/// the Peircean transforms, the identity is neutral, and composition is
/// associative.
inline RelationAlgebra make_algebra(const AlgebraSpec& spec) {
  const int n = static_cast<int>(spec.atoms.size());
  if (n == 0 || n > 30) throw BadConverse("atom count must be between 1 and 30");
  if (spec.identity < 0 || spec.identity >= n) throw BadIdentity("identity atom out of range");
  if (static_cast<int>(spec.converse.size()) != n) throw BadConverse("converse map size");
  for (Atom a = 0; a < n; ++a) {
    const Atom c = spec.converse[a];
    if (c < 0 || c >= n || spec.converse[c] != a) {
      throw BadConverse("converse is not an involution at " + spec.atoms[a]);
    }
  }
  if (spec.converse[spec.identity] != spec.identity) throw BadConverse("id is not self-converse");

  RelationAlgebra ra;
  ra.names_ = spec.atoms;
  ra.id_ = spec.identity;
  ra.converse_ = spec.converse;
  ra.table_.assign(static_cast<std::size_t>(n * n), AtomSet{});
  for (const auto& [x, y, z] : spec.allowed) {
    if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
      throw NotPeirceanClosed("allowed triple mentions an unknown atom");
    }
    ra.table_[static_cast<std::size_t>(x * n + y)] |= AtomSet::of(z);
  }

  const auto& cv = spec.converse;
  for (Atom x = 0; x < n; ++x) {
    for (Atom y = 0; y < n; ++y) {
      for (Atom z = 0; z < n; ++z) {
        if (!ra.allowed(x, y, z)) continue;
        const std::array<std::array<Atom, 3>, 5> images{{
            {cv[x], z, y},
            {z, cv[y], x},
            {cv[z], x, cv[y]},
            {y, cv[z], cv[x]},
            {cv[y], cv[x], cv[z]},
        }};
        for (const auto& t : images) {
          if (!ra.allowed(t[0], t[1], t[2])) {
            throw NotPeirceanClosed("(" + spec.atoms[x] + "," + spec.atoms[y] + "," +
                                    spec.atoms[z] + ") allowed but (" + spec.atoms[t[0]] +
                                    "," + spec.atoms[t[1]] + "," + spec.atoms[t[2]] + ") not");
          }
        }
      }
    }
  }
  for (Atom a = 0; a < n; ++a) {
    if (ra.compose_atoms(a, ra.id_) != AtomSet::of(a) ||
        ra.compose_atoms(ra.id_, a) != AtomSet::of(a)) {
      throw BadIdentity("a o id != a for " + spec.atoms[a]);
    }
  }
  for (Atom a = 0; a < n; ++a) {
    for (Atom b = 0; b < n; ++b) {
      for (Atom c = 0; c < n; ++c) {
        const AtomSet left = ra.compose(ra.compose_atoms(a, b), AtomSet::of(c));
        const AtomSet right = ra.compose(AtomSet::of(a), ra.compose_atoms(b, c));
        if (left != right) {
          throw NotAssociative("(" + spec.atoms[a] + " o " + spec.atoms[b] + ") o " +
                               spec.atoms[c]);
        }
      }
    }
  }
  return ra;
}

inline AtomSet compose_elements(const RelationAlgebra& ra, AtomSet a, AtomSet b) {
  return ra.compose(a, b);
}

namespace ra56 {

inline constexpr Atom kId = 0;
inline constexpr Atom kN = 1;
inline constexpr Atom kZero = 2;
inline constexpr Atom kOne = 3;

/// Forbidden triples besides the identity rows; the algebra is symmetric so
/// each stands for all its permutations.
inline constexpr std::array<std::array<Atom, 3>, 5> kForbidden{{
    {kN, kN, kN},
    {kOne, kOne, kOne},
    {kZero, kZero, kOne},
    {kZero, kOne, kZero},
    {kOne, kZero, kZero},
}};

inline AlgebraSpec spec() {
  AlgebraSpec s;
  s.atoms = {"id", "N", "0", "1"};
  s.identity = kId;
  s.converse = {kId, kN, kZero, kOne};
  auto forbidden = [](Atom x, Atom y, Atom z) {
    for (const auto& f : kForbidden)
      if (f[0] == x && f[1] == y && f[2] == z) return true;
    // identity rows: (id, X, Y), (X, id, Y), (X, Y, id) with X != Y
    if (x == kId && y != z) return true;
    if (y == kId && x != z) return true;
    if (z == kId && x != y) return true;
    return false;
  };
  for (Atom x = 0; x < 4; ++x)
    for (Atom y = 0; y < 4; ++y)
      for (Atom z = 0; z < 4; ++z)
        if (!forbidden(x, y, z)) s.allowed.push_back({x, y, z});
  return s;
}

}  // namespace ra56

/// The symmetric four-atom algebra on {id, N, 0, 1}.
inline const RelationAlgebra& ra_56_65() {
  static const RelationAlgebra ra = make_algebra(ra56::spec());
  return ra;
}

/// A network over some algebra: one constraint per ordered variable pair,
/// kept converse-closed (f(y, x) is the converse of f(x, y)).
class Network {
 public:
  Network() = default;

  /// All pairs, diagonal included, start at top.
  Network(const RelationAlgebra& ra, int vars)
      : vars_(vars),
        f_(static_cast<std::size_t>(vars) * static_cast<std::size_t>(vars), ra.top()) {}

  int vars() const { return vars_; }

  AtomSet at(int x, int y) const { return f_[index(x, y)]; }

  /// Intersects f(x, y) with `atoms` and f(y, x) with their converse.
  void restrict(const RelationAlgebra& ra, int x, int y, AtomSet atoms) {
    check(x, y);
    f_[index(x, y)] &= atoms;
    if (x != y) {
      f_[index(y, x)] &= ra.converse(atoms);
    } else {
      f_[index(x, x)] &= ra.converse(atoms);
    }
  }

  /// Unchecked write used by solvers that maintain the converse themselves.
  void set(int x, int y, AtomSet atoms) { f_[index(x, y)] = atoms; }

  bool atomic() const {
    for (AtomSet a : f_)
      if (a.count() != 1) return false;
    return true;
  }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(vars_) +
           static_cast<std::size_t>(y);
  }
  void check(int x, int y) const {
    if (x < 0 || y < 0 || x >= vars_ || y >= vars_) {
      throw VertexOutOfRange("variable pair (" + std::to_string(x) + "," + std::to_string(y) +
                             ")");
    }
  }

  int vars_ = 0;
  std::vector<AtomSet> f_;
};

/// Greatest fixpoint of f(x, y) <- f(x, y) & (f(x, z) o f(z, y)), with
/// f(x, x) <- f(x, x) & id. Empty result means inconsistent.
inline std::optional<Network> path_consistency(const RelationAlgebra& ra, Network net) {
  const int n = net.vars();
  for (int x = 0; x < n; ++x) {
    net.set(x, x, net.at(x, x) & ra.id());
    if (net.at(x, x).empty()) return std::nullopt;
  }
  std::vector<std::pair<int, int>> queue;
  std::vector<char> queued(static_cast<std::size_t>(n * n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      queue.emplace_back(x, y);
      queued[static_cast<std::size_t>(x * n + y)] = 1;
    }
  auto revise = [&](int x, int y, AtomSet via) {
    const AtomSet before = net.at(x, y);
    const AtomSet after = before & via;
    if (after == before) return true;
    net.set(x, y, after);
    net.set(y, x, ra.converse(after));
    if (after.empty()) return false;
    for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      auto& q = queued[static_cast<std::size_t>(a * n + b)];
      if (!q) {
        q = 1;
        queue.emplace_back(a, b);
      }
    }
    return true;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [i, j] = queue[head];
    queued[static_cast<std::size_t>(i * n + j)] = 0;
    const AtomSet fij = net.at(i, j);
    for (int k = 0; k < n; ++k) {
      // f(i, k) <= f(i, j) o f(j, k) and f(k, j) <= f(k, i) o f(i, j)
      if (!revise(i, k, ra.compose(fij, net.at(j, k)))) return std::nullopt;
      if (!revise(k, j, ra.compose(net.at(k, i), fij))) return std::nullopt;
    }
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(head + 1));
      head = static_cast<std::size_t>(-1);
    }
  }
  return net;
}

}  // namespace circsign
