#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/matrix.hpp"
#include "knlab/rr/function_field.hpp"
#include "knlab/rr/valuation.hpp"

namespace knlab::rr {

// Finite formal sum of rational points; zero multiplicities are never stored.
class Divisor {
 public:
  Divisor() = default;

  static Divisor point(const Point& p, int n = 1) {
    Divisor d;
    d.add(p, n);
    return d;
  }

  void add(const Point& p, int n) {
    if (n == 0) return;
    int& m = terms_[p];
    m += n;
    if (m == 0) terms_.erase(p);
  }

  int operator[](const Point& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Point, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [p, n] : terms_) d += n;
    return d;
  }

  bool is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  std::vector<Point> support() const {
    std::vector<Point> s;
    for (const auto& [p, n] : terms_) s.push_back(p);
    return s;
  }

  // Image of the divisor under a curve symmetry.
  Divisor transformed(const LegendreCurve& c, const CurveSymmetry& s) const {
    Divisor d;
    for (const auto& [p, n] : terms_) d.add(curve::apply_symmetry(c, s, p), n);
    return d;
  }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, n] : b.terms_) a.add(p, n);
    return a;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [p, n] : b.terms_) a.add(p, -n);
    return a;
  }
  friend Divisor operator*(int k, const Divisor& a) {
    Divisor d;
    for (const auto& [p, n] : a.terms_) d.add(p, k * n);
    return d;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, n] : terms_) {
      if (!s.empty()) s += " + ";
      if (n != 1) s += std::to_string(n) + "*";
      s += "[" + curve::to_string(p) + "]";
    }
    return s;
  }

 private:
  std::map<Point, int> terms_;
};

// Divisor of orders of f at the given points only.
inline Divisor partial_divisor(const FunctionFieldElement& f, const std::vector<Point>& points) {
  Divisor d;
  for (const auto& p : points) d.add(p, order_at(f, p));
  return d;
}

// A monomial x^i y^j (j in {0,1}) of the frame of L(M [O]).
struct FrameMonomial {
  int x_power = 0;
  int y_power = 0;
  int pole_order() const { return 2 * x_power + 3 * y_power; }
};

// Monomials with pole order at most M at O, ordered by pole order.
inline std::vector<FrameMonomial> monomial_frame(int max_pole) {
  std::vector<FrameMonomial> out;
  for (int k = 0; k <= max_pole; ++k) {
    if (k == 1) continue;
    if (k % 2 == 0) out.push_back({k / 2, 0});
    else out.push_back({(k - 3) / 2, 1});
  }
  return out;
}

inline FunctionFieldElement monomial_element(const LegendreCurve& c, const FrameMonomial& m) {
  const RationalFunction xp(RationalPolynomial::monomial(static_cast<std::size_t>(m.x_power)));
  if (m.y_power == 0) return {c, xp};
  return {c, RationalFunction(), xp};
}

// A computed basis of L(D). Every basis element is g/h with g a combination
// of the frame monomials; `coefficients[k]` holds the frame coordinates of
// the k-th g.
struct RRBasis {
  LegendreCurve curve;
  Divisor divisor;
  RationalPolynomial clearing;
  std::vector<FrameMonomial> frame;
  std::vector<RationalVector> coefficients;
  std::vector<FunctionFieldElement> basis;

  std::size_t dimension() const { return basis.size(); }

  // Coordinates of f in the basis, or nullopt if f is not in the span.
  std::optional<RationalVector> coordinates(const FunctionFieldElement& f) const {
    if (basis.empty()) {
      if (f.is_zero()) return RationalVector{};
      return std::nullopt;
    }
    const FunctionFieldElement g = f * FunctionFieldElement(curve, RationalFunction(clearing));
    if (!g.a().is_polynomial() || !g.b().is_polynomial()) return std::nullopt;
    RationalVector target(frame.size(), Rational(0));
    const RationalPolynomial& a = g.a().numerator();
    const RationalPolynomial& b = g.b().numerator();
    const Rational a_den = g.a().denominator().leading();
    const Rational b_den = g.b().denominator().leading();
    int matched = 0;
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const auto i = static_cast<std::size_t>(frame[j].x_power);
      if (frame[j].y_power == 0) target[j] = a.coeff(i) / a_den;
      else target[j] = b.coeff(i) / b_den;
      if (!target[j].is_zero()) ++matched;
    }
    // Terms outside the frame mean f has too large a pole at O.
    int nonzero = 0;
    for (const auto& v : a.coefficients()) nonzero += v.is_zero() ? 0 : 1;
    for (const auto& v : b.coefficients()) nonzero += v.is_zero() ? 0 : 1;
    if (nonzero != matched) return std::nullopt;

    RationalMatrix m(frame.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < frame.size(); ++j) m(j, k) = coefficients[k][j];
    return solve(m, target);
  }

  // Element with the given coordinates.
  FunctionFieldElement combination(const RationalVector& coords) const {
    if (coords.size() != basis.size()) throw DomainError("coordinate vector has the wrong length");
    FunctionFieldElement f(curve);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!coords[k].is_zero()) f = f + coords[k] * basis[k];
    return f;
  }
};

namespace detail {

// Local expansions of the frame monomials at p, to absolute precision > need.
inline std::vector<LaurentSeries> frame_series(const LegendreCurve& c, const Point& p,
                                               const std::vector<FrameMonomial>& frame, int need) {
  const int depth = need + 2;
  const LocalParameter lp = local_parameter(c, p, depth);
  std::vector<LaurentSeries> xpow{LaurentSeries::constant(Rational(1), depth)};
  std::vector<LaurentSeries> out;
  for (const auto& m : frame) {
    while (static_cast<int>(xpow.size()) <= m.x_power) xpow.push_back(xpow.back() * lp.x);
    const LaurentSeries& base = xpow[static_cast<std::size_t>(m.x_power)];
    out.push_back(m.y_power == 0 ? base : base * lp.y);
  }
  return out;
}

}  // namespace detail

// Basis of L(D) = { f : div(f) + D >= 0 } in a canonical echelon form.
//
// The poles away from O are cleared by h = prod (x - x_P)^e, so f in L(D)
// iff g = f h is regular off O with a pole of order <= n_O + 2 deg h there,
// and ord_Q(g) >= ord_Q(h) - n_Q at the affine points Q where that bound is
// positive. These are linear conditions on the frame coordinates of g.
inline RRBasis rr_space(const LegendreCurve& c, const Divisor& d) {
  for (const auto& p : d.support()) {
    if (!curve::on_curve(c, p)) throw DomainError("divisor point " + curve::to_string(p) + " is not on the curve");
  }

  std::map<Rational, int> exponents;
  for (const auto& [p, n] : d.terms()) {
    if (p.infinity || n <= 0) continue;
    const int e = p.y.is_zero() ? (n + 1) / 2 : n;
    int& cur = exponents[p.x];
    cur = std::max(cur, e);
  }
  RationalPolynomial h(Rational(1));
  for (const auto& [x0, e] : exponents) h = h * pow(RationalPolynomial({-x0, Rational(1)}), static_cast<unsigned>(e));

  RRBasis out{c, d, h, {}, {}, {}};
  const int max_pole = d[Point::at_infinity()] + 2 * h.degree();
  if (max_pole < 0) return out;
  out.frame = monomial_frame(max_pole);
  const std::size_t dim = out.frame.size();

  // Points that carry a condition: affine support points and the conjugates
  // of zeros of h.
  std::set<Point> check;
  for (const auto& p : d.support())
    if (!p.infinity) {
      check.insert(p);
      check.insert(curve::negate(p));
    }

  std::vector<RationalVector> rows;
  const FunctionFieldElement h_elem(c, RationalFunction(h));
  for (const auto& q : check) {
    const int need = order_at(h_elem, q) - d[q];
    if (need <= 0) continue;
    const auto series = detail::frame_series(c, q, out.frame, need);
    for (int e = 0; e < need; ++e) {
      RationalVector row(dim);
      for (std::size_t j = 0; j < dim; ++j) row[j] = series[j].coeff(e);
      rows.push_back(std::move(row));
    }
  }

  const RationalMatrix constraints = RationalMatrix::from_rows(rows, dim);
  out.coefficients = echelon_by_leading(nullspace(constraints), dim);

  const RationalFunction h_inv(RationalPolynomial(Rational(1)), h);
  for (const auto& v : out.coefficients) {
    FunctionFieldElement g(c);
    for (std::size_t j = 0; j < dim; ++j)
      if (!v[j].is_zero()) g = g + v[j] * monomial_element(c, out.frame[j]);
    out.basis.push_back(g * FunctionFieldElement(c, h_inv));
  }

  // Independent confirmation of the pole bounds.
  std::vector<Point> points = d.support();
  if (d[Point::at_infinity()] == 0) points.push_back(Point::at_infinity());
  for (const auto& f : out.basis)
    for (const auto& p : points)
      if (order_at(f, p) < -d[p]) {
        throw Error("rr_space produced " + f.str() + " with too large a pole at " + curve::to_string(p));
      }
  return out;
}

// Base locus of the span of `subspace` inside L(D): the largest divisor B
// with div(f) + D >= B for every f. The part at O, at the support of D and
// at the negatives of support points is exact. Common zeros elsewhere may
// have irrational coordinates, so they are reported through the squarefree
// polynomial whose roots are their x-coordinates.
struct BaseLocus {
  Divisor fixed;
  RationalPolynomial off_support;

  bool empty() const { return fixed.is_zero() && off_support.degree() <= 0; }
};

inline BaseLocus base_locus(const RRBasis& ambient, const std::vector<FunctionFieldElement>& subspace) {
  std::vector<FunctionFieldElement> gens;
  for (const auto& f : subspace)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) throw DomainError("base locus of the zero subspace is undefined");
  for (const auto& f : gens)
    if (!ambient.coordinates(f)) throw DomainError(f.str() + " does not lie in L(" + ambient.divisor.str() + ")");

  const LegendreCurve& c = ambient.curve;
  const Divisor& d = ambient.divisor;
  std::set<Point> exact{Point::at_infinity()};
  for (const auto& p : d.support()) {
    exact.insert(p);
    exact.insert(curve::negate(p));
  }

  BaseLocus out;
  for (const auto& p : exact) {
    int m = -1;
    for (const auto& f : gens) {
      const int v = order_at(f, p) + d[p];
      m = m < 0 ? v : std::min(m, v);
    }
    out.fixed.add(p, m);
  }

  // Write f_i = (A_i + B_i y) / den with polynomials. A common zero (x0, y0)
  // of all f_i is a root of every norm A_i^2 - B_i^2 F and every cross term
  // A_i B_j - A_j B_i, and conversely.
  RationalPolynomial den(Rational(1));
  for (const auto& f : gens) {
    for (const RationalFunction* r : {&f.a(), &f.b()}) {
      den = den * (r->denominator() / gcd(den, r->denominator()));
    }
  }
  std::vector<RationalPolynomial> as;
  std::vector<RationalPolynomial> bs;
  for (const auto& f : gens) {
    const RationalFunction a = f.a() * RationalFunction(den);
    const RationalFunction b = f.b() * RationalFunction(den);
    as.push_back(a.numerator());
    bs.push_back(b.numerator());
  }
  const RationalPolynomial cubic = c.cubic();
  RationalPolynomial g;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    g = gcd(g, as[i] * as[i] - bs[i] * bs[i] * cubic);
    for (std::size_t j = i + 1; j < gens.size(); ++j) g = gcd(g, as[i] * bs[j] - as[j] * bs[i]);
  }
  for (const auto& p : exact) {
    if (p.infinity) continue;
    const RationalPolynomial lin({-p.x, Rational(1)});
    while (g.degree() > 0 && (g % lin).is_zero()) g = g / lin;
  }
  // Keep each x-coordinate once.
  if (g.degree() > 0) g = g / gcd(g, g.derivative());
  out.off_support = g.is_zero() ? g : g.monic();
  return out;
}

}  // namespace knlab::rr
