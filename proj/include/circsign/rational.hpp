#pragma once

// Exact fractions on 64-bit integers, and points on the circle measured in
// full turns.

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "circsign/errors.hpp"

namespace circsign {

__extension__ using wide_int = __int128;

/// Reduced fraction with positive denominator. Intermediate products use
/// 128-bit integers; results that do not fit in 64 bits throw
/// ArithmeticOverflow.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Fraction(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.den_ +
                         static_cast<wide_int>(b.num_) * a.den_,
                     static_cast<wide_int>(a.den_) * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.den_ -
                         static_cast<wide_int>(b.num_) * a.den_,
                     static_cast<wide_int>(a.den_) * b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return from_wide(static_cast<wide_int>(a.num_) * b.num_,
                     static_cast<wide_int>(a.den_) * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw ArithmeticOverflow("division by zero");
    return from_wide(static_cast<wide_int>(a.num_) * b.den_,
                     static_cast<wide_int>(a.den_) * b.num_);
  }
  Fraction operator-() const { return Fraction(-num_, den_); }

  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.str();
  }

  static Fraction from_wide(wide_int num, wide_int den) {
    if (den == 0) throw ArithmeticOverflow("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const wide_int g = gcd_wide(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_int lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim) {
      throw ArithmeticOverflow("fraction exceeds 64-bit range");
    }
    Fraction f;
    f.num_ = static_cast<std::int64_t>(num);
    f.den_ = static_cast<std::int64_t>(den);
    return f;
  }

 private:
  static wide_int gcd_wide(wide_int a, wide_int b) {
    while (b != 0) {
      const wide_int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Fraction abs(const Fraction& f) { return f.num() < 0 ? -f : f; }

/// A point on the unit circle at `num/den` of a full turn, reduced, with
/// 0 <= num < den.
class RationalAngle {
 public:
  RationalAngle() = default;

  /// Any integer numerator is accepted and wrapped into [0, 1).
  RationalAngle(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw ValidationError("angle denominator must be positive");
    set(Fraction(num, den));
  }

  explicit RationalAngle(const Fraction& turns) { set(turns); }

  std::int64_t num() const { return value_.num(); }
  std::int64_t den() const { return value_.den(); }
  const Fraction& turns() const { return value_; }

  std::string str() const { return value_.str(); }

  /// Parses "num/den" (or a bare integer). Non-canonical input is reduced.
  static RationalAngle parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
      std::int64_t v = 0;
      const auto* end = part.data() + part.size();
      auto [ptr, ec] = std::from_chars(part.data(), end, v);
      if (ec != std::errc{} || ptr != end || part.empty()) {
        throw ValidationError("malformed angle \"" + std::string(text) + "\"");
      }
      return v;
    };
    if (slash == std::string_view::npos) return RationalAngle(parse_int(text), 1);
    return RationalAngle(parse_int(text.substr(0, slash)),
                         parse_int(text.substr(slash + 1)));
  }

  friend auto operator<=>(const RationalAngle&, const RationalAngle&) = default;
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) {
    return os << a.str();
  }

 private:
  void set(const Fraction& f) {
    // floor(f) for a positive denominator
    std::int64_t whole = f.num() / f.den();
    if (f.num() % f.den() != 0 && f.num() < 0) --whole;
    value_ = f - Fraction(whole);
  }

  Fraction value_{0};
};

}  // namespace circsign
