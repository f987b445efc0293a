#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bicis {

// Exact rational arithmetic for influence values and search bounds, plus a
// minus-infinity sentinel used as the "fewer than r results so far" marker.
//
// All state fits in a 128-bit numerator and a positive 128-bit denominator.
// The arithmetic stays overflow-free for vertex weights up to 2^40 and layer
// sizes up to 2^20: numerators stay below 2^82 and every cross product used
// by comparisons stays below 2^126. Floating point never enters a value or a
// comparison; it appears only in to_double() for human-readable output.
class Rational {
 public:
  using int128 = __int128;

  // Zero.
  Rational() : num_(0), den_(1) {}

  // num/den, reduced; den must be > 0.
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_ratio(int128 num, int128 den);
  static Rational from_int(std::int64_t value) { return Rational(value, 1); }
  static Rational minus_infinity();

  bool is_minus_infinity() const { return den_ == 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_negative() const { return den_ != 0 && num_ < 0; }

  int128 numerator() const { return num_; }
  int128 denominator() const { return den_; }

  // Finite operands only (sentinel arithmetic is a usage error).
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  Rational scaled(std::uint64_t factor) const;
  Rational clamped_nonnegative() const;

  // Total order, sentinel below every finite value.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);

  // "5" when integral, "11/2" otherwise, "-inf" for the sentinel.
  std::string to_string() const;
  double to_double() const;

 private:
  void reduce();

  int128 num_;
  int128 den_;  // > 0 for finite values, 0 marks minus infinity
};

std::string int128_to_string(__int128 value);

}  // namespace bicis
