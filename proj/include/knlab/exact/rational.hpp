#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "knlab/error.hpp"

namespace knlab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(implicit)
  Rational(long v) : value_(v) {}  // NOLINT(implicit)
  Rational(long long v) : value_(v) {}  // NOLINT(implicit)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(implicit)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    value_ = den < 0 ? Backend(Integer(-num), Integer(-den)) : Backend(num, den);
  }

  // Accepts "p", "-p" or "p/q" with decimal integers. Floating notation is
  // rejected so that values stay exact end to end.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [](std::string_view s) -> Integer {
      if (s.empty()) throw DomainError("empty integer in rational literal");
      std::size_t i = 0;
      if (s[0] == '+' || s[0] == '-') i = 1;
      if (i == s.size()) throw DomainError("missing digits in rational literal");
      for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
          throw DomainError("invalid character '" + std::string(1, s[k]) +
                            "' in rational literal");
        }
      }
      if (s[0] == '+') s.remove_prefix(1);
      return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) throw DivisionByZero();
    return Rational(parse_int(trim(text.substr(0, slash))), den);
  }

  // Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite double");
    int exp = 0;
    double mant = std::frexp(v, &exp);
    // 53 bits of mantissa fit exactly in an int64 after scaling.
    auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Integer num(m);
    Integer den(1);
    if (exp >= 0) {
      num <<= exp;
    } else {
      den <<= -exp;
    }
    return Rational(num, den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  double to_double() const { return value_.convert_to<double>(); }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const { return Rational(Backend(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const { return Rational(1) / *this; }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_;
};

inline Rational pow(Rational base, unsigned exp) {
  Rational result(1);
  while (exp) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

}  // namespace knlab
