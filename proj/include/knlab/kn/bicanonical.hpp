#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/matrix.hpp"
#include "knlab/kn/section.hpp"
#include "knlab/kn/surface.hpp"

namespace knlab::kn {

// psi^2 written in the invariant bases of one factor.
struct SquareExpansion {
  RationalVector eigen_coords;   // in the ++ eigenbasis from eigen_dims
  Rational constant;             // psi^2 = constant * 1 + slope * u
  Rational slope;
  FunctionFieldElement value;    // the combination, equal to psi^2
};

inline SquareExpansion expand_psi_square(const FactorData& f) {
  const FunctionFieldElement sq = f.psi * f.psi;
  const auto coords = f.space.coordinates(sq);
  if (!coords) throw Error("psi^2 does not lie in L(2[O]+2[T])");
  const auto& eb = f.eig.basis(CharacterG::trivial());
  RationalMatrix m(coords->size(), eb.size());
  for (std::size_t j = 0; j < eb.size(); ++j)
    for (std::size_t i = 0; i < coords->size(); ++i) m(i, j) = eb[j][i];
  const auto a = solve(m, *coords);
  if (!a) throw Error("psi^2 is not in the ++ eigenspace");

  const auto c1 = f.space.coordinates(f.one), cu = f.space.coordinates(f.u);
  RationalMatrix n(coords->size(), 2);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    n(i, 0) = (*c1)[i];
    n(i, 1) = (*cu)[i];
  }
  const auto b = solve(n, *coords);
  if (!b) throw Error("psi^2 is not in the span of 1 and u");
  SquareExpansion out{*a, (*b)[0], (*b)[1], (*b)[0] * f.one + (*b)[1] * f.u};
  if (!(out.value == sq)) throw Error("linear solve for psi^2 is inconsistent");
  return out;
}

struct BicanonicalBasis {
  std::array<SeparableSection, 5> z;
  SquareExpansion v1;
  SquareExpansion v2;
};

// z0 = 1 (x) 1, z1 = 1 (x) psi2^2, z2 = psi1^2 (x) 1, z3 = psi1^2 (x) psi2^2,
// z4 = psi1 (x) psi2, with psi_i^2 replaced by its expansion in {1, u_i}.
inline BicanonicalBasis bicanonical_basis(const KeumNaieData& d) {
  const SquareExpansion v1 = expand_psi_square(d.e1);
  const SquareExpansion v2 = expand_psi_square(d.e2);
  using S = SeparableSection;
  return {{S::pure(d.e1.one, d.e2.one), S::pure(d.e1.one, v2.value), S::pure(v1.value, d.e2.one),
           S::pure(v1.value, v2.value), S::pure(d.e1.psi, d.e2.psi)},
          v1,
          v2};
}

struct QuadricIdentities {
  bool q1_exact_zero = false;  // z0 z3 - z1 z2
  bool q2_exact_zero = false;  // z4^2 - z0 z3
  bool holds() const { return q1_exact_zero && q2_exact_zero; }
};

inline SeparableSection quadric1(const BicanonicalBasis& b) { return b.z[0] * b.z[3] - b.z[1] * b.z[2]; }
inline SeparableSection quadric2(const BicanonicalBasis& b) { return b.z[4] * b.z[4] - b.z[0] * b.z[3]; }

inline QuadricIdentities check_identities(const BicanonicalBasis& b) {
  return {quadric1(b).is_zero(), quadric2(b).is_zero()};
}

using ProjectivePoint = std::array<Rational, 5>;

inline Rational quadric1(const ProjectivePoint& p) { return p[0] * p[3] - p[1] * p[2]; }
inline Rational quadric2(const ProjectivePoint& p) { return p[4] * p[4] - p[0] * p[3]; }

struct NodeCheck {
  std::array<ProjectivePoint, 4> nodes;
  std::array<bool, 4> on_q1{};
  std::array<bool, 4> on_q2{};
  bool distinct = false;
  bool passed() const {
    bool ok = distinct;
    for (std::size_t i = 0; i < 4; ++i) ok = ok && on_q1[i] && on_q2[i];
    return ok;
  }
};

namespace detail {

inline bool proportional(const ProjectivePoint& a, const ProjectivePoint& b) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace detail

// The coordinate points where all but one of z0, z1, z2, z3 vanish together
// with z4.
inline NodeCheck node_check() {
  NodeCheck n;
  for (std::size_t k = 0; k < 4; ++k) {
    ProjectivePoint p{};
    p[k == 0 ? 0 : (k == 1 ? 3 : (k == 2 ? 2 : 1))] = Rational(1);
    n.nodes[k] = p;
    n.on_q1[k] = quadric1(p).is_zero();
    n.on_q2[k] = quadric2(p).is_zero();
  }
  n.distinct = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) n.distinct = n.distinct && !detail::proportional(n.nodes[i], n.nodes[j]);
  return n;
}

struct PullbackResult {
  std::size_t samples = 0;
  double max_residual = 0;
  bool vacuous = false;
  bool passed = false;
};

// Evaluates the z at random points of E1 x E2 and measures both quadrics
// relative to max(|z0 z3|, |z1 z2|).
inline PullbackResult pullback_consistency_check(const BicanonicalBasis& b, std::size_t samples, double precision,
                                                 std::uint64_t seed = 1) {
  PullbackResult r;
  r.samples = samples;
  r.vacuous = samples == 0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const LegendreCurve& c1 = b.z[0].curve1();
  const LegendreCurve& c2 = b.z[0].curve2();
  auto sample = [&](const LegendreCurve& c) {
    while (true) {
      const Complex x(u(rng), u(rng));
      if (std::abs(x) < 0.1) continue;
      return ComplexPoint::affine(x, std::sqrt(c.cubic_at(x)));
    }
  };
  std::vector<SeparableSection::Compiled> zc;
  for (const auto& z : b.z) zc.push_back(z.compiled());
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexPoint p1 = sample(c1), p2 = sample(c2);
    std::array<Complex, 5> z;
    for (std::size_t k = 0; k < 5; ++k) z[k] = zc[k].evaluate(p1, p2);
    const double scale = std::max({std::abs(z[0] * z[3]), std::abs(z[1] * z[2]), 1e-300});
    const double r1 = std::abs(z[0] * z[3] - z[1] * z[2]) / scale;
    const double r2 = std::abs(z[4] * z[4] - z[0] * z[3]) / scale;
    r.max_residual = std::max({r.max_residual, r1, r2});
  }
  r.passed = r.max_residual < precision;
  return r;
}

// Degree of the bicanonical map onto Sigma: the composite
// X^ -> E1 x E2 -> P1 x P1 has degree 2 * 16; dividing by |G| gives the degree
// of S -> P1 x P1, and Sigma -> P1 x P1 has degree 2.
struct DegreeLedger {
  int cover_degree = 2;
  int per_factor_degree = 4;
  int product_degree = 16;
  int group_order = 4;
  int sigma_degree = 2;
  int degree = 0;
};

inline DegreeLedger bicanonical_degree_ledger() {
  DegreeLedger l;
  l.product_degree = l.per_factor_degree * l.per_factor_degree;
  const int total = l.cover_degree * l.product_degree;
  if (total % (l.group_order * l.sigma_degree) != 0) throw Error("degree ledger is not integral");
  l.degree = total / (l.group_order * l.sigma_degree);
  return l;
}

}  // namespace knlab::kn
