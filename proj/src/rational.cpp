#include "pqech/rational.hpp"

#include <charconv>

namespace pqech {

__extension__ using Wide = __int128;

Rational::Rational(Int num, Int den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = arith::neg(num);
    den = arith::neg(den);
  }
  Int g = arith::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  Int g = arith::gcd(a.den_, b.den_);
  Int lhs = arith::mul(a.num_, b.den_ / g);
  Int rhs = arith::mul(b.num_, a.den_ / g);
  return {arith::add(lhs, rhs), arith::mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-cancel first so in-range products stay in range.
  Int g1 = arith::gcd(a.num_, b.den_);
  Int g2 = arith::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {arith::mul(a.num_ / g1, b.num_ / g2), arith::mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  auto lhs = static_cast<Wide>(a.num_) * b.den_;
  auto rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Int Rational::floor() const { return arith::floor_div(num_, den_); }

Int Rational::ceil() const { return arith::neg(arith::floor_div(arith::neg(num_), den_)); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("rational literal out of range: " + std::string(whole));
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("malformed rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip.front() == '-';
    if (negative || (!ip.empty() && ip.front() == '+')) ip.remove_prefix(1);
    if (fp.empty() || fp.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    Int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale = arith::mul(scale, 10);
    Int whole = ip.empty() ? 0 : parse_int(ip, text);
    Int frac = parse_int(fp, text);
    Int num = arith::add(arith::mul(whole, scale), frac);
    return {negative ? arith::neg(num) : num, scale};
  }
  return {parse_int(text, text), 1};
}

}  // namespace pqech
