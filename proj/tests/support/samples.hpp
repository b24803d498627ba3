#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "knlab/curve/legendre.hpp"
#include "knlab/rr/function_field.hpp"

namespace samples {

using knlab::Integer;
using knlab::Rational;
using knlab::curve::LegendreCurve;
using knlab::curve::Point;

inline const std::vector<Rational>& suite_lambdas() {
  static const std::vector<Rational> v{Rational(2), Rational(3), Rational(5, 3), Rational(-1)};
  return v;
}

// Curves with a non-torsion rational point, used where exact points off the
// 2-torsion are needed. The suite curves have none.
inline const std::vector<Rational>& rich_lambdas() {
  static const std::vector<Rational> v{Rational(3, 2), Rational(-5, 2), Rational(7, 3), Rational(13, 4)};
  return v;
}

// Rational points: a small brute search for seeds, then closure under
// doubling and the four symmetries.
inline std::vector<Point> rational_points(const LegendreCurve& c, std::size_t count) {
  std::vector<Point> out;
  auto push = [&](const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (int d = 1; d <= 12; ++d)
    for (int n = -60; n <= 60; ++n) {
      const Rational x(n, d);
      const Rational f = c.cubic_at(x);
      if (f.sign() <= 0) continue;
      const Integer p = f.numerator(), q = f.denominator();
      const Integer sp = boost::multiprecision::sqrt(p), sq = boost::multiprecision::sqrt(q);
      if (sp * sp == p && sq * sq == q) push(Point::affine(x, Rational(sp, sq)));
    }
  for (std::size_t i = 0; i < out.size() && out.size() < count; ++i) {
    for (const auto& s : knlab::curve::all_symmetries()) push(knlab::curve::apply_symmetry(c, s, out[i]));
    const Point d = knlab::curve::double_point(c, out[i]);
    if (!knlab::curve::is_two_torsion(d)) push(d);
  }
  if (out.size() > count) out.resize(count);
  return out;
}

inline knlab::RationalPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rational(coef(rng));
  return knlab::RationalPolynomial(std::move(c));
}

// A random nonzero a(x) + b(x) y with small rational-function parts.
inline knlab::rr::FunctionFieldElement random_element(const LegendreCurve& c, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  auto part = [&] {
    if (coin(rng)) return knlab::RationalFunction();
    knlab::RationalPolynomial den = random_polynomial(rng, 2, 3);
    if (den.is_zero()) den = knlab::RationalPolynomial(Rational(1));
    return knlab::RationalFunction(random_polynomial(rng, 3, 4), den);
  };
  while (true) {
    knlab::rr::FunctionFieldElement f(c, part(), part());
    if (!f.is_zero()) return f;
  }
}

}  // namespace samples
