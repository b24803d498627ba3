#pragma once

// Test-side reference computations. They deliberately use routes that are
// different from the library code they check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "knlab/exact/matrix.hpp"
#include "knlab/exact/rational.hpp"
#include "knlab/rr/function_field.hpp"

namespace oracle {

// Fractions on machine integers, reduced after every step.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    return {n / (g == 0 ? 1 : g), d / (g == 0 ? 1 : g)};
  }
  friend Fraction operator+(Fraction a, Fraction b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Fraction operator-(Fraction a, Fraction b) { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Fraction operator*(Fraction a, Fraction b) { return make(a.num * b.num, a.den * b.den); }
  knlab::Rational to_rational() const { return knlab::Rational(static_cast<long long>(num), static_cast<long long>(den)); }
};

inline Fraction random_fraction(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> n(-bound, bound);
  std::uniform_int_distribution<int> d(1, bound);
  return Fraction::make(n(rng), d(rng));
}

inline knlab::Integer determinant(const std::vector<std::vector<knlab::Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  knlab::Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<knlab::Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<knlab::Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const knlab::Integer term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : knlab::Integer(-term);
  }
  return det;
}

inline knlab::Integer abs_gcd(knlab::Integer a, knlab::Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    knlab::Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct MinorFactors {
  std::vector<knlab::Integer> factors;  // includes units; size = rank
};

// Invariant factors from gcds of k x k minors.
inline MinorFactors invariant_factors_by_minors(const knlab::IntegerMatrix& m) {
  MinorFactors out;
  knlab::Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    knlab::Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<knlab::Integer>> sub(k, std::vector<knlab::Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        g = abs_gcd(g, determinant(sub));
      }
    if (g == 0) break;
    out.factors.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Multiplicity of x0 as a zero (positive) or pole (negative) of r in Q(x).
inline int x_order(const knlab::RationalFunction& r, const knlab::Rational& x0) {
  return r.numerator().multiplicity(x0) - r.denominator().multiplicity(x0);
}

inline int degree_at_infinity(const knlab::RationalFunction& r) {
  return r.numerator().degree() - r.denominator().degree();
}

// ord_P(a + b y) without series. At O, ord(x) = -2 and ord(y) = -3; at a
// 2-torsion point ord(x - e) = 2 and ord(y) = 1. In both cases the two
// summands have orders of different parity, so the minimum is attained.
// At other points, divide out the common power of (x - x0); the remaining
// value at P is either nonzero or the conjugate is nonzero, in which case
// ord_P equals the order of the norm a^2 - b^2 F at x0.
inline int valuation(const knlab::rr::FunctionFieldElement& f, const knlab::curve::Point& p) {
  using knlab::RationalFunction;
  const RationalFunction& a = f.a();
  const RationalFunction& b = f.b();
  constexpr int kNone = 1 << 30;
  if (p.infinity) {
    const int oa = a.is_zero() ? kNone : -2 * degree_at_infinity(a);
    const int ob = b.is_zero() ? kNone : -2 * degree_at_infinity(b) - 3;
    return std::min(oa, ob);
  }
  if (p.y.is_zero()) {
    const int oa = a.is_zero() ? kNone : 2 * x_order(a, p.x);
    const int ob = b.is_zero() ? kNone : 2 * x_order(b, p.x) + 1;
    return std::min(oa, ob);
  }
  const int k = std::min(a.is_zero() ? kNone : x_order(a, p.x), b.is_zero() ? kNone : x_order(b, p.x));
  const RationalFunction shift(knlab::RationalPolynomial(knlab::Rational(1)),
                               knlab::pow(knlab::RationalPolynomial({-p.x, knlab::Rational(1)}), static_cast<unsigned>(std::abs(k))));
  const RationalFunction scale = k >= 0 ? shift : RationalFunction(1) / shift;
  const RationalFunction a1 = a * scale;
  const RationalFunction b1 = b * scale;
  const knlab::Rational value = (a1.is_zero() ? knlab::Rational(0) : a1(p.x)) + (b1.is_zero() ? knlab::Rational(0) : b1(p.x) * p.y);
  if (!value.is_zero()) return k;
  const RationalFunction norm = a1 * a1 - b1 * b1 * RationalFunction(f.curve().cubic());
  return k + x_order(norm, p.x);
}

}  // namespace oracle
