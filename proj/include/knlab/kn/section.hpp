#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "knlab/equivariant/character.hpp"
#include "knlab/equivariant/linearization.hpp"
#include "knlab/error.hpp"
#include "knlab/exact/matrix.hpp"
#include "knlab/rr/function_field.hpp"

namespace knlab::kn {

using curve::ComplexPoint;
using curve::LegendreCurve;
using equiv::FactorConvention;
using equiv::GroupElement;
using rr::FunctionFieldElement;

namespace detail {

inline RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
  return (a * b).divmod(gcd(a, b)).first.monic();
}

// Coordinates of the elements in a common finite-dimensional Q-space: after
// clearing a common denominator D, f = (A(x) + B(x) y) / D and the
// coefficients of A and B are the coordinates.
inline std::vector<RationalVector> linear_coordinates(const std::vector<FunctionFieldElement>& fs) {
  RationalPolynomial d(Rational(1));
  for (const auto& f : fs) d = lcm(lcm(d, f.a().denominator()), f.b().denominator());
  std::vector<std::pair<RationalPolynomial, RationalPolynomial>> parts;
  std::size_t len = 1;
  for (const auto& f : fs) {
    auto clear = [&](const RationalFunction& r) {
      return r.numerator() * d.divmod(r.denominator()).first;
    };
    parts.emplace_back(clear(f.a()), clear(f.b()));
    len = std::max<std::size_t>(len, std::max(parts.back().first.degree(), parts.back().second.degree()) + 1);
  }
  std::vector<RationalVector> out;
  for (const auto& [a, b] : parts) {
    RationalVector v(2 * len, Rational(0));
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = a.coeff(i);
      v[len + i] = b.coeff(i);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Double-precision form of a function field element for repeated numeric
// evaluation: a = an/ad, b = bn/bd and their x-derivatives.
class CompiledElement {
 public:
  explicit CompiledElement(const FunctionFieldElement& f)
      : an_(to_complex(f.a().numerator())),
        ad_(to_complex(f.a().denominator())),
        bn_(to_complex(f.b().numerator())),
        bd_(to_complex(f.b().denominator())),
        dan_(an_.derivative()),
        dad_(ad_.derivative()),
        dbn_(bn_.derivative()),
        dbd_(bd_.derivative()),
        cubic_(to_complex(f.curve().cubic())),
        dcubic_(cubic_.derivative()) {}

  Complex evaluate(const ComplexPoint& p) const {
    return an_.evaluate(p.x) / ad_.evaluate(p.x) + bn_.evaluate(p.x) / bd_.evaluate(p.x) * p.y;
  }

  Complex derivative(const ComplexPoint& p) const {
    const Complex x = p.x;
    const Complex ad = ad_.evaluate(x), bd = bd_.evaluate(x);
    const Complex da = (dan_.evaluate(x) * ad - an_.evaluate(x) * dad_.evaluate(x)) / (ad * ad);
    const Complex b = bn_.evaluate(x) / bd;
    const Complex db = (dbn_.evaluate(x) * bd - bn_.evaluate(x) * dbd_.evaluate(x)) / (bd * bd);
    const Complex dy = dcubic_.evaluate(x) / (2.0 * p.y);
    return da + db * p.y + b * dy;
  }

 private:
  ComplexPolynomial an_, ad_, bn_, bd_, dan_, dad_, dbn_, dbd_, cubic_, dcubic_;
};

// sum c * s1 (x) s2 on E1 x E2.
class SeparableSection {
 public:
  struct Term {
    FunctionFieldElement s1;
    FunctionFieldElement s2;
    Rational c;
  };

  SeparableSection(LegendreCurve c1, LegendreCurve c2) : c1_(std::move(c1)), c2_(std::move(c2)) {}

  static SeparableSection pure(const FunctionFieldElement& s1, const FunctionFieldElement& s2, Rational c = Rational(1)) {
    SeparableSection s(s1.curve(), s2.curve());
    s.add(s1, s2, std::move(c));
    return s;
  }

  void add(const FunctionFieldElement& s1, const FunctionFieldElement& s2, Rational c = Rational(1)) {
    if (!(s1.curve() == c1_) || !(s2.curve() == c2_)) throw DomainError("term lives on different curves");
    if (!c.is_zero()) terms_.push_back({s1, s2, std::move(c)});
  }

  const std::vector<Term>& terms() const { return terms_; }
  const LegendreCurve& curve1() const { return c1_; }
  const LegendreCurve& curve2() const { return c2_; }

  friend SeparableSection operator+(SeparableSection a, const SeparableSection& b) {
    a.check_same(b);
    for (const auto& t : b.terms_) a.terms_.push_back(t);
    return a;
  }
  friend SeparableSection operator*(const Rational& s, SeparableSection a) {
    SeparableSection out(a.c1_, a.c2_);
    for (auto& t : a.terms_) out.add(t.s1, t.s2, s * t.c);
    return out;
  }
  friend SeparableSection operator-(SeparableSection a, const SeparableSection& b) { return a + Rational(-1) * b; }
  friend SeparableSection operator*(const SeparableSection& a, const SeparableSection& b) {
    a.check_same(b);
    SeparableSection out(a.c1_, a.c2_);
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.add(s.s1 * t.s1, s.s2 * t.s2, s.c * t.c);
    return out;
  }

  // The coefficient tensor sum c v1 v2^T in coordinates of the factor spans.
  RationalMatrix coefficient_tensor() const {
    std::vector<FunctionFieldElement> f1, f2;
    for (const auto& t : terms_) {
      f1.push_back(t.s1);
      f2.push_back(t.s2);
    }
    if (terms_.empty()) return RationalMatrix(1, 1);
    const auto v1 = detail::linear_coordinates(f1);
    const auto v2 = detail::linear_coordinates(f2);
    RationalMatrix m(v1[0].size(), v2[0].size());
    for (std::size_t k = 0; k < terms_.size(); ++k)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v1[k][i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += terms_[k].c * v1[k][i] * v2[k][j];
      }
    return m;
  }

  // Exact test in the function field of E1 x E2.
  bool is_zero() const { return coefficient_tensor().is_zero(); }
  bool equals(const SeparableSection& other) const { return (*this - other).is_zero(); }

  // Pullback by g acting through the two factor conventions.
  SeparableSection pullback(GroupElement g, const FactorConvention& conv1, const FactorConvention& conv2) const {
    SeparableSection out(c1_, c2_);
    for (const auto& t : terms_) out.add(t.s1.pullback(conv1(g)), t.s2.pullback(conv2(g)), t.c);
    return out;
  }

  Complex evaluate(const ComplexPoint& p1, const ComplexPoint& p2) const { return compiled().evaluate(p1, p2); }
  double magnitude(const ComplexPoint& p1, const ComplexPoint& p2) const { return compiled().magnitude(p1, p2); }
  std::pair<Complex, Complex> gradient(const ComplexPoint& p1, const ComplexPoint& p2) const {
    return compiled().gradient(p1, p2);
  }

  class Compiled {
   public:
    explicit Compiled(const SeparableSection& s) {
      for (const auto& t : s.terms_) terms_.push_back({CompiledElement(t.s1), CompiledElement(t.s2), t.c.to_double()});
    }

    Complex evaluate(const ComplexPoint& p1, const ComplexPoint& p2) const {
      Complex v = 0;
      for (const auto& t : terms_) v += t.c * t.s1.evaluate(p1) * t.s2.evaluate(p2);
      return v;
    }

    // Sum of |c s1 s2| at the point, the scale for relative tests.
    double magnitude(const ComplexPoint& p1, const ComplexPoint& p2) const {
      double m = 0;
      for (const auto& t : terms_) m += std::abs(t.c * t.s1.evaluate(p1) * t.s2.evaluate(p2));
      return m;
    }

    // Partial derivatives d/dx1 and d/dx2 along the curves.
    std::pair<Complex, Complex> gradient(const ComplexPoint& p1, const ComplexPoint& p2) const {
      Complex d1 = 0, d2 = 0;
      for (const auto& t : terms_) {
        d1 += t.c * t.s1.derivative(p1) * t.s2.evaluate(p2);
        d2 += t.c * t.s1.evaluate(p1) * t.s2.derivative(p2);
      }
      return {d1, d2};
    }

   private:
    struct Term {
      CompiledElement s1;
      CompiledElement s2;
      double c;
    };
    std::vector<Term> terms_;
  };

  Compiled compiled() const { return Compiled(*this); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + t.c.str() + ")*[" + t.s1.str() + "](x)[" + t.s2.str() + "]";
    }
    return s;
  }

 private:
  void check_same(const SeparableSection& b) const {
    if (!(c1_ == b.c1_) || !(c2_ == b.c2_)) throw DomainError("sections live on different surfaces");
  }

  LegendreCurve c1_;
  LegendreCurve c2_;
  std::vector<Term> terms_;
};

}  // namespace knlab::kn

namespace knlab::kn {

// Rank of a family of sections over Q, from their coefficient tensors in a
// joint coordinate system.
inline std::size_t section_rank(const std::vector<SeparableSection>& sections) {
  std::vector<FunctionFieldElement> f1, f2;
  for (const auto& s : sections)
    for (const auto& t : s.terms()) {
      f1.push_back(t.s1);
      f2.push_back(t.s2);
    }
  if (f1.empty()) return 0;
  const auto v1 = detail::linear_coordinates(f1);
  const auto v2 = detail::linear_coordinates(f2);
  const std::size_t n1 = v1[0].size(), n2 = v2[0].size();
  RationalMatrix m(sections.size(), n1 * n2);
  std::size_t k = 0;
  for (std::size_t r = 0; r < sections.size(); ++r)
    for (const auto& t : sections[r].terms()) {
      for (std::size_t i = 0; i < n1; ++i) {
        if (v1[k][i].is_zero()) continue;
        for (std::size_t j = 0; j < n2; ++j) m(r, i * n2 + j) += t.c * v1[k][i] * v2[k][j];
      }
      ++k;
    }
  return rank(m);
}

}  // namespace knlab::kn
