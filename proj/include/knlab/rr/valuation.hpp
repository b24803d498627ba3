#pragma once

#include <string>

#include "knlab/error.hpp"
#include "knlab/rr/function_field.hpp"
#include "knlab/rr/laurent.hpp"

namespace knlab::rr {

// Expansions of x and y in a uniformizer t at a rational point:
//   O           t = x/y
//   (e, 0)      t = y
//   (x0, y0)    t = x - x0      (y0 != 0)
struct LocalParameter {
  LaurentSeries x;
  LaurentSeries y;
};

inline constexpr int kInitialSeriesDepth = 8;
inline constexpr int kMaxSeriesDepth = 128;

inline LocalParameter local_parameter(const LegendreCurve& c, const Point& p, int depth) {
  if (!curve::on_curve(c, p)) throw DomainError("point " + curve::to_string(p) + " is not on the curve");
  const Rational& l = c.lambda();

  if (p.infinity) {
    // With z = x/y and w = 1/y the curve reads w = z^3 + a2 z^2 w + a4 z w^2,
    // where y^2 = x^3 + a2 x^2 + a4 x. Each substitution gains two orders.
    const Rational a2 = -(Rational(1) + l);
    const Rational& a4 = l;
    const int target = depth + 3;
    std::vector<Rational> zc(static_cast<std::size_t>(target), Rational(0));
    zc[0] = Rational(1);
    const LaurentSeries z(1, zc);
    const LaurentSeries z2 = z * z;
    const LaurentSeries z3 = z2 * z;
    LaurentSeries w = LaurentSeries::big_o(3);
    while (w.precision() < target) {
      LaurentSeries next = z3 + a2 * (z2 * w) + a4 * (z * (w * w));
      if (next.precision() <= w.precision()) throw Error("series iteration at O stalled");
      w = next;
    }
    LaurentSeries y = w.inverse();
    return {z * y, y};
  }

  if (p.y.is_zero()) {
    // t = y, x = e + u with u = t^2 / ((e - a + u)(e - b + u)), a and b the
    // other two roots of the cubic.
    const Rational& e = p.x;
    Rational others[2];
    int k = 0;
    for (const auto& r : c.two_torsion_x())
      if (r != e) others[k++] = r;
    const Rational c0 = e - others[0];
    const Rational c1 = e - others[1];
    LaurentSeries u = LaurentSeries::big_o(2);
    while (u.precision() < depth) {
      LaurentSeries lhs = (LaurentSeries::constant(c0, depth) + u) * (LaurentSeries::constant(c1, depth) + u);
      LaurentSeries next = lhs.inverse().shifted(2);
      if (next.precision() <= u.precision()) throw Error("series iteration at 2-torsion stalled");
      u = next;
    }
    std::vector<Rational> tc(static_cast<std::size_t>(depth), Rational(0));
    tc[0] = Rational(1);
    return {LaurentSeries::constant(e, depth) + u, LaurentSeries(1, tc)};
  }

  // Generic affine point: y = sqrt(cubic(x0 + t)) on the branch through y0.
  const RationalPolynomial shifted = [&] {
    const RationalPolynomial xt({p.x, Rational(1)});
    const RationalPolynomial cub = c.cubic();
    RationalPolynomial acc;
    const auto& cc = cub.coefficients();
    for (auto it = cc.rbegin(); it != cc.rend(); ++it) acc = acc * xt + RationalPolynomial(*it);
    return acc;
  }();
  std::vector<Rational> fc(static_cast<std::size_t>(depth), Rational(0));
  for (int i = 0; i <= shifted.degree() && i < depth; ++i) fc[static_cast<std::size_t>(i)] = shifted.coeff(static_cast<std::size_t>(i));
  LaurentSeries cubic_series(0, fc);
  std::vector<Rational> xc(static_cast<std::size_t>(depth), Rational(0));
  xc[0] = p.x;
  if (depth > 1) xc[1] = Rational(1);
  return {LaurentSeries(0, xc), cubic_series.sqrt_with_leading(p.y)};
}

// Expansion of f at p to the given working depth.
inline LaurentSeries expand(const FunctionFieldElement& f, const Point& p, int depth) {
  const LocalParameter lp = local_parameter(f.curve(), p, depth);
  auto eval_rf = [&](const RationalFunction& r) {
    if (r.is_zero()) return LaurentSeries::big_o(LaurentSeries::kExactZero);
    return evaluate(r.numerator(), lp.x, depth) / evaluate(r.denominator(), lp.x, depth);
  };
  return eval_rf(f.a()) + eval_rf(f.b()) * lp.y;
}

// ord_p(f) from a local expansion. The working depth starts at 8 terms and
// doubles whenever the expansion cancels completely.
inline int order_at(const FunctionFieldElement& f, const Point& p) {
  if (f.is_zero()) throw DomainError("order of the zero function is undefined");
  for (int depth = kInitialSeriesDepth; depth <= kMaxSeriesDepth; depth *= 2) {
    try {
      LaurentSeries s = expand(f, p, depth);
      if (!s.is_indeterminate()) return s.valuation();
    } catch (const PrecisionExhausted&) {
    }
  }
  throw ConvergenceError("order_at: local expansion cancelled beyond depth " + std::to_string(kMaxSeriesDepth));
}

}  // namespace knlab::rr
