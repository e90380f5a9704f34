#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace remon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A probability-like quantity carried either as an exact rational or as a
/// double. Exact values stay exact through arithmetic; as soon as a float
/// operand is involved the result is a float. Dropping to double is always
/// explicit, via value().
class Scalar {
 public:
  Scalar() = default;

  static Scalar exact(long long num, long long den = 1);
  static Scalar exact(Rational r);
  static Scalar real(double v);

  /// Parses "p/q" (or a bare integer) to an exact value, anything else to a
  /// double. Throws std::invalid_argument on malformed input or q <= 0.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return exact_; }
  double value() const;
  /// Exact representation; throws std::logic_error on a float-mode value.
  const Rational& rational() const;

  bool is_zero() const;
  bool is_negative() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;
  bool operator<=(const Scalar& o) const;
  bool operator>(const Scalar& o) const { return o < *this; }
  bool operator>=(const Scalar& o) const { return o <= *this; }

  /// "p/q" (or "p" for integers) in exact mode, shortest round-trip decimal
  /// in float mode.
  std::string str() const;

 private:
  Rational rat_ = 0;
  double dbl_ = 0.0;
  bool exact_ = true;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace remon
