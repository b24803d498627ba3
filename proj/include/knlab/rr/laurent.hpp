#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/polynomial.hpp"
#include "knlab/exact/rational.hpp"

namespace knlab::rr {

// Thrown internally when a truncated computation has cancelled completely.
// Callers retry at a larger depth.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted() : Error("local series cancelled to working precision") {}
};

// Truncated Laurent series  sum_i c_i t^(val + i) + O(t^(val + c.size())).
// When nonempty, c[0] != 0. An empty series is O(t^val): nothing is known
// beyond the absence of terms below `val`.
class LaurentSeries {
 public:
  // Precision used for values that are exactly zero.
  static constexpr int kExactZero = 1 << 20;

  LaurentSeries() = default;

  static LaurentSeries big_o(int abs_precision) {
    LaurentSeries s;
    s.val_ = abs_precision;
    return s;
  }

  // c + O(t^rel) for a constant known exactly.
  static LaurentSeries constant(const Rational& c, int rel_precision) {
    if (c.is_zero()) return big_o(rel_precision);
    std::vector<Rational> v(static_cast<std::size_t>(std::max(rel_precision, 1)), Rational(0));
    v[0] = c;
    return LaurentSeries(0, std::move(v));
  }

  // t^shift (c[0] + c[1] t + ...) with the given coefficients.
  LaurentSeries(int val, std::vector<Rational> coeffs) : val_(val), c_(std::move(coeffs)) { normalize(); }

  bool is_indeterminate() const { return c_.empty(); }
  int precision() const { return val_ + static_cast<int>(c_.size()); }
  int relative_precision() const { return static_cast<int>(c_.size()); }

  int valuation() const {
    if (c_.empty()) throw PrecisionExhausted();
    return val_;
  }

  // Coefficient of t^e; only meaningful for e < precision().
  Rational coeff(int e) const {
    if (e < val_ || e >= precision()) return Rational(0);
    return c_[static_cast<std::size_t>(e - val_)];
  }

  LaurentSeries shifted(int k) const {
    LaurentSeries s = *this;
    s.val_ += k;
    return s;
  }

  LaurentSeries operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int abs = std::min(a.precision(), b.precision());
    const int start = std::min(a.val_, b.val_);
    if (abs <= start) return big_o(abs);
    std::vector<Rational> v(static_cast<std::size_t>(abs - start));
    for (int e = start; e < abs; ++e) v[static_cast<std::size_t>(e - start)] = a.coeff(e) + b.coeff(e);
    return LaurentSeries(start, std::move(v));
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.c_.empty() && b.c_.empty()) return big_o(a.val_ + b.val_);
    if (a.c_.empty()) return big_o(a.val_ + b.val_);
    if (b.c_.empty()) return big_o(a.val_ + b.val_);
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(a.val_ + b.val_, std::move(v));
  }

  friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
    if (s.is_zero()) return big_o(kExactZero);
    LaurentSeries r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  LaurentSeries inverse() const {
    if (c_.empty()) throw PrecisionExhausted();
    const std::size_t n = c_.size();
    std::vector<Rational> inv(n, Rational(0));
    const Rational lead_inv = c_[0].inverse();
    inv[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
      Rational acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * inv[k - j];
      inv[k] = -acc * lead_inv;
    }
    return LaurentSeries(-val_, std::move(inv));
  }

  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

  // Square root of a series with nonzero constant term, given that root.
  LaurentSeries sqrt_with_leading(const Rational& root) const {
    if (c_.empty() || val_ != 0 || root * root != c_[0] || root.is_zero()) {
      throw DomainError("square root needs a unit series with the given leading root");
    }
    const std::size_t n = c_.size();
    std::vector<Rational> s(n, Rational(0));
    s[0] = root;
    const Rational half_inv = (Rational(2) * root).inverse();
    for (std::size_t k = 1; k < n; ++k) {
      Rational acc = c_[k];
      for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
      s[k] = acc * half_inv;
    }
    return LaurentSeries(0, std::move(s));
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == 0) return;
    val_ += static_cast<int>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  int val_ = 0;
  std::vector<Rational> c_;
};

// p(s) by Horner's rule; constants carry relative precision `depth`.
inline LaurentSeries evaluate(const RationalPolynomial& p, const LaurentSeries& s, int depth) {
  const auto& c = p.coefficients();
  if (c.empty()) return LaurentSeries::big_o(LaurentSeries::kExactZero);
  LaurentSeries acc = LaurentSeries::constant(c.back(), depth);
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * s + LaurentSeries::constant(c[k], depth);
  return acc;
}

}  // namespace knlab::rr
