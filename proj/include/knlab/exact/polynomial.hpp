#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/rational.hpp"

namespace knlab {

// Dense univariate polynomial, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) {  // NOLINT(implicit)
    if (constant != T(0)) coeffs_.push_back(std::move(constant));
  }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return Polynomial({T(0), T(1)}); }
  static Polynomial monomial(std::size_t deg, T c = T(1)) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <typename U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }
  T operator()(const T& at) const { return evaluate<T>(at); }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * (T(1) / leading());
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const T& s) {
    if (s == T(0)) return {};
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  // Euclidean division over a field: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial(), r};
    std::vector<T> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), T(0));
    const T inv_lead = T(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      T factor = r.leading() * inv_lead;
      q[shift] = factor;
      for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r.coeffs_[i + shift] -= factor * d.coeffs_[i];
      r.trim();
    }
    return {Polynomial(std::move(q)), r};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

  // Multiplicity of `root` as a zero.
  int multiplicity(const T& root) const {
    if (is_zero()) throw DomainError("multiplicity at zero polynomial");
    const Polynomial lin({-root, T(1)});
    Polynomial p = *this;
    int m = 0;
    while (true) {
      auto [q, r] = p.divmod(lin);
      if (!r.is_zero()) return m;
      p = std::move(q);
      ++m;
    }
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeffs_[k] << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

// Monic gcd over a field; gcd(0, 0) = 0.
template <typename T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned exp) {
  Polynomial<T> result(T(1));
  for (unsigned i = 0; i < exp; ++i) result *= p;
  return result;
}

}  // namespace knlab
