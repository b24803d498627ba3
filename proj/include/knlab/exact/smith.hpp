#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knlab/exact/matrix.hpp"

namespace knlab {

// Invariant factor decomposition of coker(M) = Z^cols / rowspace(M):
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, all d_i > 1.
struct SmithForm {
  std::vector<Integer> factors;
  std::size_t free_rank = 0;
  std::size_t rank = 0;

  // Order of the torsion part (1 for a free group).
  Integer torsion_order() const {
    Integer n = 1;
    for (const auto& d : factors) n *= d;
    return n;
  }

  std::string str() const {
    std::string s;
    if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
    for (const auto& d : factors) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
    return s.empty() ? "0" : s;
  }
};

namespace detail {

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Floor-free quotient so that a - q*b has |.| < |b|.
inline Integer trunc_div(const Integer& a, const Integer& b) { return a / b; }

}  // namespace detail

// Classical elimination with a minimal-absolute-value pivot at each stage.
inline SmithForm smith_normal_form(IntegerMatrix m) {
  using detail::abs_int;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> diagonal;

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t;
      std::size_t pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          Integer a = abs_int(m(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = detail::trunc_div(m(i, t), m(t, t));
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = detail::trunc_div(m(t, j), m(t, t));
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (m(t, t) == 0) break;
    diagonal.push_back(abs_int(m(t, t)));
  }

  SmithForm out;
  out.rank = diagonal.size();
  out.free_rank = cols - out.rank;
  for (const auto& d : diagonal)
    if (d != 1) out.factors.push_back(d);
  return out;
}

}  // namespace knlab
