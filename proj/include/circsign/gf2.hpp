#pragma once

// Dense GF(2) linear systems over bit-packed rows.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace circsign {

class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitRow& operator^=(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Index of the highest set bit, or -1.
  long highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) {
        return static_cast<long>(w * 64 + 63 -
                                 static_cast<std::size_t>(std::countl_zero(words_[w])));
      }
    }
    return -1;
  }

  /// Parity of the AND with `other`.
  bool dot(const BitRow& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Accumulates equations `row . x = rhs` and eliminates incrementally.
///
/// Pivots are taken on the highest set column, so every pivot variable
/// depends only on lower-indexed free variables. Setting all free variables
/// to 0 then yields the lexicographically smallest solution (variable 0 most
/// significant).
class Gf2System {
 public:
  explicit Gf2System(std::size_t unknowns)
      : unknowns_(unknowns), pivot_of_(unknowns, -1) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }

  /// Returns false iff the equation contradicts the ones already added.
  bool add(BitRow row, bool rhs) {
    reduce(row, rhs);
    const long top = row.highest();
    if (top < 0) {
      if (rhs) consistent_ = false;
      return !rhs;
    }
    // keep the basis fully reduced on pivot columns
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].test(static_cast<std::size_t>(top))) {
        rows_[r] ^= row;
        rhs_[r] = rhs_[r] != rhs;
      }
    }
    pivot_of_[static_cast<std::size_t>(top)] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
    return true;
  }

  /// Lexicographically smallest solution, or nothing if inconsistent.
  std::optional<BitRow> solve() const {
    if (!consistent_) return std::nullopt;
    BitRow x(unknowns_);
    // rows are fully reduced: each contains its pivot and only free columns
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rhs_[r]) x.set(static_cast<std::size_t>(rows_[r].highest()));
    }
    return x;
  }

 private:
  void reduce(BitRow& row, bool& rhs) const {
    for (long c = row.highest(); c >= 0; --c) {
      if (!row.test(static_cast<std::size_t>(c))) continue;
      const long p = pivot_of_[static_cast<std::size_t>(c)];
      if (p >= 0) {
        row ^= rows_[static_cast<std::size_t>(p)];
        rhs = rhs != rhs_[static_cast<std::size_t>(p)];
      }
    }
  }

  std::size_t unknowns_;
  std::vector<BitRow> rows_;
  std::vector<bool> rhs_;
  std::vector<long> pivot_of_;
  bool consistent_ = true;
};

}  // namespace circsign
