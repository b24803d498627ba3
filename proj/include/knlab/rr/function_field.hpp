#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knlab/curve/legendre.hpp"
#include "knlab/error.hpp"
#include "knlab/exact/rational_function.hpp"

namespace knlab::rr {

using curve::ComplexPoint;
using curve::CurveSymmetry;
using curve::LegendreCurve;
using curve::Point;

// a(x) + b(x) y in the function field of a Legendre curve. Since {1, y} is a
// basis over Q(x), the canonical forms of a and b give a normal form.
class FunctionFieldElement {
 public:
  explicit FunctionFieldElement(LegendreCurve c) : curve_(std::move(c)) {}
  FunctionFieldElement(LegendreCurve c, RationalFunction a, RationalFunction b = {})
      : curve_(std::move(c)), a_(std::move(a)), b_(std::move(b)) {}

  static FunctionFieldElement constant(const LegendreCurve& c, const Rational& v) { return {c, RationalFunction(v)}; }
  static FunctionFieldElement x(const LegendreCurve& c) { return {c, RationalFunction::x()}; }
  static FunctionFieldElement y(const LegendreCurve& c) { return {c, RationalFunction(), RationalFunction(1)}; }

  const LegendreCurve& curve() const { return curve_; }
  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  FunctionFieldElement operator-() const { return {curve_, -a_, -b_}; }

  friend FunctionFieldElement operator+(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    f.check_same_curve(g);
    return {f.curve_, f.a_ + g.a_, f.b_ + g.b_};
  }
  friend FunctionFieldElement operator-(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    return f + (-g);
  }
  friend FunctionFieldElement operator*(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    f.check_same_curve(g);
    const RationalFunction cubic(f.curve_.cubic());
    return {f.curve_, f.a_ * g.a_ + f.b_ * g.b_ * cubic, f.a_ * g.b_ + f.b_ * g.a_};
  }
  friend FunctionFieldElement operator*(const Rational& s, const FunctionFieldElement& f) {
    return {f.curve_, RationalFunction(s) * f.a_, RationalFunction(s) * f.b_};
  }

  // (a - b y) / (a^2 - b^2 cubic): multiply by the conjugate.
  FunctionFieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    const RationalFunction norm_value = norm();
    return {curve_, a_ / norm_value, -b_ / norm_value};
  }
  friend FunctionFieldElement operator/(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    return f * g.inverse();
  }

  // N(f) = f * conj(f) = a^2 - b^2 cubic, an element of Q(x).
  RationalFunction norm() const { return a_ * a_ - b_ * b_ * RationalFunction(curve_.cubic()); }

  // f o s. Every symmetry is an involution, so this is also f o s^{-1}.
  FunctionFieldElement pullback(const CurveSymmetry& s) const {
    FunctionFieldElement r = *this;
    if (s.shift_by_torsion) {
      // (x, y) -> (lambda/x, -lambda y/x^2)
      const RationalFunction lx(RationalPolynomial(curve_.lambda()), RationalPolynomial::x());
      const RationalFunction yfactor(RationalPolynomial(-curve_.lambda()), RationalPolynomial::monomial(2));
      r = FunctionFieldElement(curve_, a_.compose(lx), b_.compose(lx) * yfactor);
    }
    if (s.sign < 0) r = FunctionFieldElement(curve_, r.a_, -r.b_);
    return r;
  }

  Complex evaluate(const ComplexPoint& p) const {
    if (p.infinity) throw DomainError("numeric evaluation at O is not supported");
    return a_.evaluate(p.x) + b_.evaluate(p.x) * p.y;
  }

  // d/dx along the curve at p, using dy/dx = cubic'(x) / (2y).
  Complex derivative(const ComplexPoint& p) const {
    const Complex dy = curve_.cubic_derivative_at(p.x) / (2.0 * p.y);
    return a_.derivative().evaluate(p.x) + b_.derivative().evaluate(p.x) * p.y + b_.evaluate(p.x) * dy;
  }

  friend bool operator==(const FunctionFieldElement& f, const FunctionFieldElement& g) {
    return f.curve_ == g.curve_ && f.a_ == g.a_ && f.b_ == g.b_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    if (!a_.is_zero()) s = a_.str();
    if (!b_.is_zero()) s += (s.empty() ? "" : " + ") + std::string("[") + b_.str() + "]*y";
    return s;
  }

 private:
  void check_same_curve(const FunctionFieldElement& g) const {
    if (!(curve_ == g.curve_)) throw DomainError("function field elements live on different curves");
  }

  LegendreCurve curve_;
  RationalFunction a_;
  RationalFunction b_;
};

}  // namespace knlab::rr
