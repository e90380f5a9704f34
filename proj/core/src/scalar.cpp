#include "remon/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace remon {

Scalar Scalar::exact(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Scalar s;
  s.rat_ = Rational(BigInt(num), BigInt(den));
  s.exact_ = true;
  return s;
}

Scalar Scalar::exact(Rational r) {
  Scalar s;
  s.rat_ = std::move(r);
  s.exact_ = true;
  return s;
}

Scalar Scalar::real(double v) {
  Scalar s;
  s.dbl_ = v;
  s.exact_ = false;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw std::invalid_argument("empty numeric literal");
  text = text.substr(begin, end - begin + 1);

  auto parse_int = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("sign without digits");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("invalid integer literal: " +
                                    std::string(t));
    return BigInt(std::string(t));
  };

  if (size_t slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0)
      throw std::invalid_argument("rational denominator must be positive: " +
                                  std::string(text));
    return Scalar::exact(Rational(num, den));
  }
  if (text.find_first_of(".eEnN") == std::string_view::npos) {
    return Scalar::exact(Rational(parse_int(text)));
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(v))
    throw std::invalid_argument("invalid numeric literal: " +
                                std::string(text));
  return Scalar::real(v);
}

double Scalar::value() const {
  return exact_ ? rat_.convert_to<double>() : dbl_;
}

const Rational& Scalar::rational() const {
  if (!exact_) throw std::logic_error("float-mode scalar has no rational form");
  return rat_;
}

bool Scalar::is_zero() const { return exact_ ? rat_.is_zero() : dbl_ == 0.0; }

bool Scalar::is_negative() const {
  return exact_ ? rat_.sign() < 0 : dbl_ < 0.0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar::exact(Rational(rat_ + o.rat_));
  return Scalar::real(value() + o.value());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar::exact(Rational(rat_ - o.rat_));
  return Scalar::real(value() - o.value());
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return Scalar::exact(Rational(rat_ * o.rat_));
  return Scalar::real(value() * o.value());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  if (exact_ && o.exact_) return Scalar::exact(Rational(rat_ / o.rat_));
  return Scalar::real(value() / o.value());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  *this = *this + o;
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ == o.rat_;
  return value() == o.value();
}

bool Scalar::operator<(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ < o.rat_;
  return value() < o.value();
}

bool Scalar::operator<=(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ <= o.rat_;
  return value() <= o.value();
}

std::string Scalar::str() const {
  if (exact_) {
    std::string s = numerator(rat_).str();
    if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
    return s;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, dbl_);
  return std::string(buf, ptr);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace remon
