#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "pqech/arith.hpp"

namespace pqech {

/// Exact fraction over checked 64-bit integers, always in lowest terms with a
/// positive denominator. Arithmetic that would overflow throws OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return {arith::neg(num_), den_}; }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Smallest integer >= this.
  Int ceil() const;
  Int floor() const;

  /// Canonical rendering: "p" for integers, "p/q" otherwise.
  std::string str() const;

  /// Accepts "p", "p/q" and plain decimals such as "2.5" or "-0.125".
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pqech
