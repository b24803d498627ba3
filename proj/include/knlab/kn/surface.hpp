#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knlab/curve/legendre.hpp"
#include "knlab/double_cover/invariants.hpp"
#include "knlab/equivariant/canonical.hpp"
#include "knlab/equivariant/character.hpp"
#include "knlab/equivariant/linearization.hpp"
#include "knlab/error.hpp"
#include "knlab/kn/section.hpp"
#include "knlab/rr/riemann_roch.hpp"

namespace knlab::kn {

using equiv::CharacterG;
using equiv::DimensionTable;
using equiv::EigenDecomposition;

constexpr double kDefaultPrecision = 1e-12;

// One factor E_i with L(2[O] + 2[T]) split by character, the invariant
// basis {1, u = x + lambda/x} and the anti-invariant generator psi.
struct FactorData {
  LegendreCurve curve;
  FactorConvention conv;
  rr::RRBasis space;
  EigenDecomposition eig;
  FunctionFieldElement one;
  FunctionFieldElement u;
  FunctionFieldElement psi;
};

inline bool is_invariant(const FunctionFieldElement& f, const FactorConvention& conv) {
  return f.pullback(conv.g1) == f && f.pullback(conv.g2) == f;
}

inline FactorData factor_data(const Rational& lambda, const FactorConvention& conv) {
  const LegendreCurve c(lambda);
  rr::RRBasis space = rr::rr_space(c, equiv::origin_plus_half_period(2));
  EigenDecomposition eig = equiv::eigen_dims(equiv::LinearizedSpace::natural(space, conv));
  const CharacterG minus{-1, -1};
  if (eig.dims[CharacterG::trivial()] != 2 || eig.dims[minus] != 1) {
    throw Error("unexpected eigenspace table " + eig.dims.str() + " on L(2[O]+2[T])");
  }
  const FunctionFieldElement one = FunctionFieldElement::constant(c, Rational(1));
  const FunctionFieldElement x = FunctionFieldElement::x(c);
  const FunctionFieldElement u = x + FunctionFieldElement::constant(c, lambda) / x;
  // {1, u} are independent ++ elements of L(D), so they span the 2-dimensional
  // ++ eigenspace.
  for (const auto& f : {one, u}) {
    if (!space.coordinates(f) || !is_invariant(f, conv)) throw Error(f.str() + " is not an invariant section");
  }
  const FunctionFieldElement psi = eig.elements(minus).front();
  return {c, conv, std::move(space), std::move(eig), one, u, psi};
}

// E1 uses (translation, negation) for (g1, g2) and E2 the reverse.
struct KeumNaieData {
  FactorData e1;
  FactorData e2;

  KeumNaieData(const Rational& lambda1, const Rational& lambda2)
      : e1(factor_data(lambda1, FactorConvention::translation_first())),
        e2(factor_data(lambda2, FactorConvention::negation_first())) {}

  SeparableSection pullback(const SeparableSection& s, GroupElement g) const {
    return s.pullback(g, e1.conv, e2.conv);
  }
  bool is_invariant(const SeparableSection& s) const {
    return pullback(s, {1, 0}).equals(s) && pullback(s, {0, 1}).equals(s);
  }
};

struct BranchBasis {
  std::array<SeparableSection, 5> sections;
  std::array<std::string, 5> names;
  int invariant_dim = 0;
  int anti_invariant_dim = 0;
  std::size_t rank = 0;
  bool all_invariant = false;
};

// (V1++ (x) V2++) + (V1-- (x) V2--) for the (4,4) bundle.
inline BranchBasis invariant_branch_basis(const KeumNaieData& d) {
  using S = SeparableSection;
  BranchBasis b{{S::pure(d.e1.one, d.e2.one), S::pure(d.e1.one, d.e2.u), S::pure(d.e1.u, d.e2.one),
                 S::pure(d.e1.u, d.e2.u), S::pure(d.e1.psi, d.e2.psi)},
                {"1(x)1", "1(x)u2", "u1(x)1", "u1(x)u2", "psi1(x)psi2"}};
  const DimensionTable inv = equiv::product_eigen_dims(d.e1.eig.dims, d.e2.eig.dims, CharacterG::trivial());
  b.invariant_dim = inv[CharacterG::trivial()];
  b.anti_invariant_dim = inv[CharacterG{-1, -1}];
  b.rank = section_rank({b.sections.begin(), b.sections.end()});
  b.all_invariant = true;
  for (const auto& s : b.sections) b.all_invariant = b.all_invariant && d.is_invariant(s);
  if (b.invariant_dim != 5 || b.rank != 5 || !b.all_invariant) throw Error("invariant branch basis check failed");
  return b;
}

struct KNParams {
  Rational lambda1;
  Rational lambda2;
  std::array<Rational, 5> coeffs;
  double precision = kDefaultPrecision;

  void validate() const {
    (void)LegendreCurve{lambda1};
    (void)LegendreCurve{lambda2};
    bool nonzero = false;
    for (const auto& c : coeffs) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw DomainError("branch coefficients must not all vanish");
    if (!(precision > 0.0) || !std::isfinite(precision)) throw DomainError("precision must be a positive number");
  }
};

// Random nonzero coefficient vector with small numerators and denominators.
inline std::array<Rational, 5> random_coefficients(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<Rational, 5> c;
  while (true) {
    bool nonzero = false;
    for (auto& v : c) {
      const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
      const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
      v = Rational(Integer(num), Integer(den));
      nonzero = nonzero || num != 0;
    }
    if (nonzero) return c;
  }
}

inline SeparableSection branch_section(const BranchBasis& b, const std::array<Rational, 5>& coeffs) {
  SeparableSection f = Rational(0) * b.sections[0];
  for (std::size_t k = 0; k < 5; ++k) f = f + coeffs[k] * b.sections[k];
  return f;
}

// The 16 fixed points of g1 g2, which acts as z -> -z + T on both factors:
// pairs of points with 2R = T.
struct FixedPoint {
  ComplexPoint p1;
  ComplexPoint p2;
};

inline std::vector<FixedPoint> fixed_points(const KeumNaieData& d, double precision) {
  const auto r1 = curve::halve_to(d.e1.curve, curve::torsion_point(), precision);
  const auto r2 = curve::halve_to(d.e2.curve, curve::torsion_point(), precision);
  std::vector<FixedPoint> out;
  for (const auto& a : r1)
    for (const auto& b : r2) out.push_back({a, b});
  return out;
}

struct FreeActionResult {
  double margin = 0;          // min over fixed points of |f| / sum |c_k b_k|
  std::size_t worst = 0;      // index of the minimizing fixed point
  FixedPoint worst_point;
  std::vector<double> values;
  bool passed = false;
};

// Relative margin, so scaling the coefficients leaves it unchanged.
inline FreeActionResult free_action_check(const KeumNaieData& d, const SeparableSection& f, double precision) {
  FreeActionResult r;
  r.margin = std::numeric_limits<double>::infinity();
  const auto pts = fixed_points(d, precision);
  const auto fc = f.compiled();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double mag = fc.magnitude(pts[i].p1, pts[i].p2);
    const double v = mag == 0 ? 0.0 : std::abs(fc.evaluate(pts[i].p1, pts[i].p2)) / mag;
    r.values.push_back(v);
    if (v < r.margin) {
      r.margin = v;
      r.worst = i;
      r.worst_point = pts[i];
    }
  }
  r.passed = r.margin > precision;
  return r;
}

// Base loci of the ++ systems on each factor; their product contains the base
// locus of the invariant (4,4) system.
struct BasePointResult {
  rr::BaseLocus factor1;
  rr::BaseLocus factor2;
  bool free() const { return factor1.empty() && factor2.empty(); }
};

inline BasePointResult base_point_check(const KeumNaieData& d) {
  return {rr::base_locus(d.e1.space, {d.e1.one, d.e1.u}), rr::base_locus(d.e2.space, {d.e2.one, d.e2.u})};
}

// Newton search for common zeros of f, df/dx1, df/dx2 in the affine chart of
// x1, x2 away from the ramification points. Heuristic only.
struct SingularityHit {
  ComplexPoint p1;
  ComplexPoint p2;
  double relative_value = 0;
};

struct SingularityScan {
  std::size_t starts = 0;
  std::size_t converged = 0;
  std::vector<SingularityHit> hits;
  bool clean() const { return hits.empty(); }
};

namespace detail {

// Point over x continuing the branch of y closest to y_prev.
inline ComplexPoint lift(const LegendreCurve& c, Complex x, Complex y_prev) {
  const Complex y = std::sqrt(c.cubic_at(x));
  return ComplexPoint::affine(x, std::abs(y - y_prev) <= std::abs(-y - y_prev) ? y : -y);
}

}  // namespace detail

inline SingularityScan singularity_scan(const KeumNaieData& d, const SeparableSection& f, double hit_tolerance = 1e-8,
                                        int grid = 5, double radius = 2.5) {
  const LegendreCurve& c1 = d.e1.curve;
  const LegendreCurve& c2 = d.e2.curve;
  std::vector<ComplexPoint> s1, s2;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      // Offset grid so that no start sits on 0, 1 or lambda.
      const Complex x((-radius + 2 * radius * (i + 0.37) / grid), (-radius + 2 * radius * (j + 0.61) / grid));
      for (int s : {1, -1}) {
        s1.push_back(ComplexPoint::affine(x, Complex(s) * std::sqrt(c1.cubic_at(x))));
        s2.push_back(ComplexPoint::affine(x, Complex(s) * std::sqrt(c2.cubic_at(x))));
      }
    }

  SingularityScan out;
  const auto fc = f.compiled();
  for (const auto& a0 : s1)
    for (const auto& b0 : s2) {
      ++out.starts;
      ComplexPoint a = a0, b = b0;
      bool ok = false;
      for (int it = 0; it < 40; ++it) {
        const auto [g1, g2] = fc.gradient(a, b);
        const double h1 = 1e-6 * (1 + std::abs(a.x)), h2 = 1e-6 * (1 + std::abs(b.x));
        const auto [g11p, g21p] = fc.gradient(detail::lift(c1, a.x + h1, a.y), b);
        const auto [g11m, g21m] = fc.gradient(detail::lift(c1, a.x - h1, a.y), b);
        const auto [g12p, g22p] = fc.gradient(a, detail::lift(c2, b.x + h2, b.y));
        const auto [g12m, g22m] = fc.gradient(a, detail::lift(c2, b.x - h2, b.y));
        const Complex j11 = (g11p - g11m) / (2 * h1), j21 = (g21p - g21m) / (2 * h1);
        const Complex j12 = (g12p - g12m) / (2 * h2), j22 = (g22p - g22m) / (2 * h2);
        const Complex det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300 || !std::isfinite(std::abs(det))) break;
        const Complex dx1 = (j22 * g1 - j12 * g2) / det;
        const Complex dx2 = (j11 * g2 - j21 * g1) / det;
        a = detail::lift(c1, a.x - dx1, a.y);
        b = detail::lift(c2, b.x - dx2, b.y);
        if (!std::isfinite(std::abs(a.x)) || !std::isfinite(std::abs(b.x)) || std::abs(a.x) > 1e6 ||
            std::abs(b.x) > 1e6) {
          break;
        }
        if (std::abs(dx1) + std::abs(dx2) < 1e-13 * (1 + std::abs(a.x) + std::abs(b.x))) {
          ok = true;
          break;
        }
      }
      if (!ok) continue;
      // Skip the ramification points, where x is not a local coordinate.
      if (std::abs(a.y) < 1e-6 || std::abs(b.y) < 1e-6 || std::abs(a.x) < 1e-6 || std::abs(b.x) < 1e-6) continue;
      ++out.converged;
      const double mag = fc.magnitude(a, b);
      const double rel = mag == 0 ? 0.0 : std::abs(fc.evaluate(a, b)) / mag;
      if (rel < hit_tolerance) {
        bool seen = false;
        for (const auto& h : out.hits)
          seen = seen || std::abs(h.p1.x - a.x) + std::abs(h.p1.y - a.y) + std::abs(h.p2.x - b.x) +
                                 std::abs(h.p2.y - b.y) <
                             1e-6;
        if (!seen) out.hits.push_back({a, b, rel});
      }
    }
  return out;
}

// (K^2, chi, p_g, q) of the quotient of the double cover by the subgroup of G
// generated by the given elements.
struct InvariantLedger {
  Integer k2_hat;
  Integer chi_hat;
  Integer k2;
  Integer chi;
  int pg = 0;
  int q = 0;
  int group_order = 0;
  bool noether_consistent = false;  // chi = 1 - q + p_g
  bool severi_equality = false;     // K^2 = 4 chi
};

inline std::vector<GroupElement> subgroup_closure(const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> h{{0, 0}};
  for (const auto& g : gens) {
    std::vector<GroupElement> more = h;
    for (const auto& x : h) {
      const GroupElement y = x * g;
      bool in = false;
      for (const auto& z : more) in = in || z == y;
      if (!in) more.push_back(y);
    }
    h = more;
  }
  return h;
}

inline InvariantLedger surface_invariant_ledger(const Rational& lambda1, const Rational& lambda2,
                                                const std::vector<GroupElement>& generators = {{1, 0}, {0, 1}}) {
  InvariantLedger l;
  const auto h = subgroup_closure(generators);
  l.group_order = static_cast<int>(h.size());
  const auto cover = dc::cover_invariants({2, 2});
  l.k2_hat = cover.k2;
  l.chi_hat = cover.chi;
  const auto quot = dc::quotient_invariants(cover.k2, cover.chi, l.group_order);
  l.k2 = quot.k2;
  l.chi = quot.chi;
  const auto canon = equiv::canonical_eigen_table(lambda1, lambda2);
  for (const auto& c : CharacterG::all()) {
    bool trivial_on_h = true;
    for (const auto& g : h) trivial_on_h = trivial_on_h && c(g) == 1;
    if (trivial_on_h) l.pg += canon.total[c];
  }
  l.q = equiv::invariant_one_forms(generators);
  l.noether_consistent = l.chi == 1 - l.q + l.pg;
  l.severi_equality = l.k2 == 4 * l.chi;
  return l;
}

// Branch parameters plus the projectivized invariant section space.
struct ModuliLedger {
  int parameters = 0;
  int invariant_dim = 0;
  int dimension = 0;
};

inline ModuliLedger moduli_dimension_ledger(int parameters, int invariant_dim) {
  if (parameters < 0 || invariant_dim < 1) throw DomainError("moduli ledger needs nonnegative inputs");
  return {parameters, invariant_dim, parameters + invariant_dim - 1};
}

inline ModuliLedger moduli_dimension_ledger(const KeumNaieData& d) {
  return moduli_dimension_ledger(2, invariant_branch_basis(d).invariant_dim);
}

// The ++ parts entering the exact-sequence bound for Ext^1.
struct Ext1Ledger {
  int h0_oy_d = 0;   // h0(O_Y(D))++
  int h0_oy = 0;     // h0(O_Y)++
  int h0_od_d = 0;   // h0(O_D(D))++
  int h0_od_l = 0;   // h0(O_D(L))++ = h0(O_Y(L))++
  int ext1_pullback = 0;
  int bound = 0;
};

inline Ext1Ledger ext1_bound_ledger(const Rational& lambda1, const Rational& lambda2) {
  const KeumNaieData d(lambda1, lambda2);
  Ext1Ledger l;
  l.h0_oy_d = equiv::product_eigen_dims(d.e1.eig.dims, d.e2.eig.dims, CharacterG::trivial())[CharacterG::trivial()];
  l.h0_oy = 1;
  l.h0_od_d = l.h0_oy_d - l.h0_oy;
  const auto h1 = equiv::natural_decomposition(d.e1.curve, 1, d.e1.conv).dims;
  const auto h2 = equiv::natural_decomposition(d.e2.curve, 1, d.e2.conv).dims;
  l.h0_od_l = equiv::product_eigen_dims(h1, h2, CharacterG::trivial())[CharacterG::trivial()];
  l.ext1_pullback = equiv::irregularity_ledger();
  l.bound = l.h0_od_d + l.h0_od_l - l.ext1_pullback;
  return l;
}

}  // namespace knlab::kn
