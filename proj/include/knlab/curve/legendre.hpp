#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/rational.hpp"
#include "knlab/exact/rational_function.hpp"

namespace knlab::curve {

// y^2 = x (x - 1) (x - lambda). The 2-torsion is rational: O, (0,0), (1,0),
// (lambda,0). The distinguished half-period used throughout is T = (0,0).
class LegendreCurve {
 public:
  explicit LegendreCurve(Rational lambda) : lambda_(std::move(lambda)) {
    if (lambda_.is_zero() || lambda_ == Rational(1)) {
      throw DomainError("Legendre parameter must avoid 0 and 1, got " + lambda_.str());
    }
  }

  const Rational& lambda() const { return lambda_; }

  // The cubic x (x - 1) (x - lambda).
  RationalPolynomial cubic() const {
    return RationalPolynomial({Rational(0), lambda_, -(Rational(1) + lambda_), Rational(1)});
  }

  // Roots of the cubic in the order 0, 1, lambda.
  std::array<Rational, 3> two_torsion_x() const { return {Rational(0), Rational(1), lambda_}; }

  template <typename S>
  S cubic_at(const S& x) const {
    return x * (x - S(1)) * (x - lambda_as<S>());
  }
  template <typename S>
  S cubic_derivative_at(const S& x) const {
    const S l = lambda_as<S>();
    return S(3) * x * x - S(2) * (S(1) + l) * x + l;
  }

  template <typename S>
  S lambda_as() const {
    if constexpr (std::is_same_v<S, Rational>) {
      return lambda_;
    } else {
      return S(lambda_.to_double());
    }
  }

  friend bool operator==(const LegendreCurve& a, const LegendreCurve& b) { return a.lambda_ == b.lambda_; }

 private:
  Rational lambda_;
};

// Point of y^2 = cubic(x) with coordinates in S (Rational or Complex).
template <typename S>
struct BasicPoint {
  bool infinity = true;
  S x{0};
  S y{0};

  static BasicPoint at_infinity() { return {}; }
  static BasicPoint affine(S x, S y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const BasicPoint& a, const BasicPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

using Point = BasicPoint<Rational>;
using ComplexPoint = BasicPoint<Complex>;

// Total order on exact points so they can key a divisor: O first.
inline std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.infinity || b.infinity) {
    if (a.infinity && b.infinity) return std::strong_ordering::equal;
    return a.infinity ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.x <=> b.x; c != 0) return c;
  return a.y <=> b.y;
}

inline std::string to_string(const Point& p) {
  if (p.infinity) return "O";
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}

inline Point torsion_point() { return Point::affine(Rational(0), Rational(0)); }

inline bool on_curve(const LegendreCurve& c, const Point& p) {
  return p.infinity || p.y * p.y == c.cubic_at(p.x);
}

inline double curve_residual(const LegendreCurve& c, const ComplexPoint& p) {
  if (p.infinity) return 0.0;
  return std::abs(p.y * p.y - c.cubic_at(p.x));
}

inline bool is_two_torsion(const Point& p) { return p.infinity || p.y.is_zero(); }

// z -> sign * z + shift with shift in {O, T}. The four values form (Z/2)^2.
struct CurveSymmetry {
  int sign = 1;
  bool shift_by_torsion = false;

  static CurveSymmetry identity() { return {1, false}; }
  static CurveSymmetry negation() { return {-1, false}; }
  static CurveSymmetry translation() { return {1, true}; }
  static CurveSymmetry negated_translation() { return {-1, true}; }

  // (a * b)(z) = a(b(z)). Since -T = T the shifts simply add.
  friend CurveSymmetry operator*(const CurveSymmetry& a, const CurveSymmetry& b) {
    return {a.sign * b.sign, a.shift_by_torsion != b.shift_by_torsion};
  }
  friend bool operator==(const CurveSymmetry& a, const CurveSymmetry& b) = default;

  bool is_identity() const { return sign == 1 && !shift_by_torsion; }

  std::string str() const {
    if (is_identity()) return "id";
    std::string s = sign < 0 ? "-z" : "z";
    if (shift_by_torsion) s += "+T";
    return s;
  }
};

inline std::array<CurveSymmetry, 4> all_symmetries() {
  return {CurveSymmetry::identity(), CurveSymmetry::negation(), CurveSymmetry::translation(),
          CurveSymmetry::negated_translation()};
}

// Translation by T = (0,0): (x, y) -> (lambda/x, -lambda y / x^2), with O <-> T.
template <typename S>
BasicPoint<S> translate_by_torsion(const LegendreCurve& c, const BasicPoint<S>& p) {
  if (p.infinity) return BasicPoint<S>::affine(S(0), S(0));
  if (p.x == S(0) && p.y == S(0)) return BasicPoint<S>::at_infinity();
  const S l = c.lambda_as<S>();
  return BasicPoint<S>::affine(l / p.x, -l * p.y / (p.x * p.x));
}

template <typename S>
BasicPoint<S> negate(const BasicPoint<S>& p) {
  if (p.infinity) return p;
  return BasicPoint<S>::affine(p.x, -p.y);
}

template <typename S>
BasicPoint<S> apply_symmetry(const LegendreCurve& c, const CurveSymmetry& s, const BasicPoint<S>& p) {
  BasicPoint<S> q = s.sign < 0 ? negate(p) : p;
  return s.shift_by_torsion ? translate_by_torsion(c, q) : q;
}

// [2]P via the tangent construction.
template <typename S>
BasicPoint<S> double_point(const LegendreCurve& c, const BasicPoint<S>& p) {
  if (p.infinity || p.y == S(0)) return BasicPoint<S>::at_infinity();
  const S slope = c.cubic_derivative_at(p.x) / (S(2) * p.y);
  const S l = c.lambda_as<S>();
  const S x3 = slope * slope + (S(1) + l) - S(2) * p.x;
  const S y3 = -(p.y + slope * (x3 - p.x));
  return BasicPoint<S>::affine(x3, y3);
}

// The four points R with [2]R = T. Their x-coordinates satisfy x^2 = lambda
// because x([2]R) = (x^2 - lambda)^2 / (4 cubic(x)). Each root is refined by
// Newton iteration on x^2 - lambda and y^2 - cubic(x).
inline std::vector<ComplexPoint> halve_to(const LegendreCurve& c, const Point& target, double precision) {
  if (!(target == torsion_point())) throw DomainError("halving is implemented for the half-period T = (0,0) only");
  if (!(precision > 0.0)) throw DomainError("precision must be positive");
  const Complex l(c.lambda().to_double(), 0.0);
  constexpr int kMaxIter = 64;

  auto refine = [&](Complex z, auto&& f, auto&& df) {
    for (int it = 0; it < kMaxIter; ++it) {
      const Complex step = f(z) / df(z);
      z -= step;
      if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
    }
    return z;
  };

  std::vector<ComplexPoint> out;
  const Complex root = std::sqrt(l);
  for (Complex x0 : {root, -root}) {
    Complex x = refine(x0, [&](Complex z) { return z * z - l; }, [](Complex z) { return 2.0 * z; });
    if (std::abs(x * x - l) >= precision) {
      throw ConvergenceError("Newton refinement of x^2 = lambda did not reach precision");
    }
    const Complex cx = c.cubic_at(x);
    const Complex yroot = std::sqrt(cx);
    for (Complex y0 : {yroot, -yroot}) {
      Complex y = refine(y0, [&](Complex z) { return z * z - cx; }, [](Complex z) { return 2.0 * z; });
      out.push_back(ComplexPoint::affine(x, y));
    }
  }
  for (const auto& p : out) {
    if (curve_residual(c, p) >= precision * (1.0 + std::abs(p.y) * std::abs(p.y))) {
      throw ConvergenceError("halved point misses the curve equation");
    }
  }
  return out;
}

}  // namespace knlab::curve
