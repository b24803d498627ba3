#pragma once

#include <complex>
#include <string>
#include <utility>

#include "knlab/exact/polynomial.hpp"

namespace knlab {

using Complex = std::complex<double>;
using ComplexPolynomial = Polynomial<Complex>;

inline ComplexPolynomial to_complex(const RationalPolynomial& p) {
  std::vector<Complex> c;
  c.reserve(p.coefficients().size());
  for (const auto& r : p.coefficients()) c.emplace_back(r.to_double(), 0.0);
  return ComplexPolynomial(std::move(c));
}

// Element of Q(x) in canonical form: numerator and denominator coprime, the
// denominator monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT(implicit)
  RationalFunction(RationalPolynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(RationalPolynomial num, RationalPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction x() { return RationalFunction(RationalPolynomial::x()); }

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational operator()(const Rational& at) const {
    Rational d = den_(at);
    if (d.is_zero()) throw DivisionByZero();
    return num_(at) / d;
  }

  Complex evaluate(Complex at) const { return to_complex(num_).evaluate(at) / to_complex(den_).evaluate(at); }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // Substitutes `inner` for the variable.
  RationalFunction compose(const RationalFunction& inner) const {
    auto horner = [&inner](const RationalPolynomial& p) {
      RationalFunction acc;
      const auto& c = p.coefficients();
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RationalFunction(*it);
      return acc;
    };
    return horner(num_) / horner(den_);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  struct Normalized {};
  RationalFunction(RationalPolynomial num, RationalPolynomial den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = RationalPolynomial(Rational(1));
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
      num_ = num_ * lead.inverse();
      den_ = den_ * lead.inverse();
    }
  }

  RationalPolynomial num_;
  RationalPolynomial den_;
};

}  // namespace knlab
