#include "bicis/rational.hpp"

#include <cstdlib>

#include "bicis/errors.hpp"

namespace bicis {

namespace {

using uint128 = unsigned __int128;

uint128 abs128(__int128 v) {
  return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void require_finite(const Rational& r) {
  if (r.is_minus_infinity()) {
    throw UsageError("arithmetic on the minus-infinity sentinel");
  }
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den <= 0) throw UsageError("rational denominator must be positive");
  reduce();
}

Rational Rational::from_ratio(int128 num, int128 den) {
  if (den <= 0) throw UsageError("rational denominator must be positive");
  Rational r;
  r.num_ = num;
  r.den_ = den;
  r.reduce();
  return r;
}

Rational Rational::minus_infinity() {
  Rational r;
  r.num_ = -1;
  r.den_ = 0;
  return r;
}

void Rational::reduce() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  uint128 g = gcd128(abs128(num_), static_cast<uint128>(den_));
  num_ /= static_cast<int128>(g);
  den_ /= static_cast<int128>(g);
}

Rational operator+(const Rational& a, const Rational& b) {
  require_finite(a);
  require_finite(b);
  return Rational::from_ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  require_finite(a);
  require_finite(b);
  return Rational::from_ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational Rational::scaled(std::uint64_t factor) const {
  require_finite(*this);
  return from_ratio(num_ * static_cast<int128>(factor), den_);
}

Rational Rational::clamped_nonnegative() const {
  require_finite(*this);
  return num_ < 0 ? Rational() : *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity()) {
    if (a.is_minus_infinity() && b.is_minus_infinity()) return std::strong_ordering::equal;
    return a.is_minus_infinity() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Cross products stay within the documented envelope (< 2^126).
  Rational::int128 lhs = a.num_ * b.den_;
  Rational::int128 rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Rational& a, const Rational& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string int128_to_string(__int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  uint128 v = abs128(value);
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

std::string Rational::to_string() const {
  if (is_minus_infinity()) return "-inf";
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

double Rational::to_double() const {
  if (is_minus_infinity()) return -1.0 / 0.0;
  return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace bicis
