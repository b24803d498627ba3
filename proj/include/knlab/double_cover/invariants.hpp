#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/rational.hpp"

namespace knlab::dc {

// Bidegree (a, b) of the branch class L on a product of two elliptic curves.
struct BranchType {
  Integer a = 0;
  Integer b = 0;

  BranchType() = default;
  BranchType(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a < 0 || b < 0) throw DomainError("branch bidegree must be nonnegative");
  }

  // L^2 = 2ab on E1 x E2.
  Integer self_intersection() const { return 2 * a * b; }
  std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

struct SurfaceInvariants {
  Integer k2;
  Integer chi;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Smooth double cover of an abelian surface branched on a smooth divisor in
// |2L|: K^2 = 2 L^2 and chi = L^2 / 2.
inline SurfaceInvariants cover_invariants(const BranchType& l) {
  const Integer l2 = l.self_intersection();
  return {2 * l2, l2 / 2};
}

// Invariants of the quotient by a free action of a group of the given order.
inline SurfaceInvariants quotient_invariants(const Integer& k2, const Integer& chi, const Integer& order) {
  if (order <= 0) throw DomainError("group order must be positive");
  if (k2 % order != 0 || chi % order != 0) {
    throw DomainError("invariants (" + k2.str() + ", " + chi.str() + ") are not divisible by the group order " +
                      order.str());
  }
  return {k2 / order, chi / order};
}

enum class BaseSurface { abelian, other };

// Singularity data of the branch curve for the canonical resolution.
struct HorikawaData {
  Integer k2_hat;
  Integer chi_hat;
  std::vector<Integer> multiplicities;
  Integer t = 0;

  std::vector<Integer> xi() const {
    std::vector<Integer> out;
    for (const auto& m : multiplicities) out.push_back(m / 2);
    return out;
  }

  void validate() const {
    for (const auto& m : multiplicities)
      if (m < 2) throw DomainError("singular point multiplicity must be at least 2, got " + m.str());
    if (t < 0) throw DomainError("t must be nonnegative");
  }
};

struct HorikawaResult {
  Integer k2_star;    // K_hat^2 - t
  Integer k2_rhs;     // 2 L^2 - 2 sum (xi - 1)^2
  Integer chi;        // L^2 / 2 - sum xi (xi - 1) / 2
  bool k2_consistent = false;
  bool chi_consistent = false;
  bool consistent = false;
};

namespace detail {

inline HorikawaResult horikawa_from_xi(const Integer& k2_hat, const Integer& chi_hat, const std::vector<Integer>& xi,
                                       const Integer& t, const Integer& l2) {
  Integer sq = 0, tri = 0;
  for (const auto& x : xi) {
    if (x < 1) throw DomainError("xi must be at least 1");
    sq += (x - 1) * (x - 1);
    tri += x * (x - 1);
  }
  if ((l2 - tri) % 2 != 0) throw DomainError("L^2 = " + l2.str() + " gives a non-integral chi");
  HorikawaResult r;
  r.k2_star = k2_hat - t;
  r.k2_rhs = 2 * l2 - 2 * sq;
  r.chi = (l2 - tri) / 2;
  r.k2_consistent = r.k2_star == r.k2_rhs;
  r.chi_consistent = r.chi == chi_hat;
  r.consistent = r.k2_consistent && r.chi_consistent;
  return r;
}

}  // namespace detail

// Canonical-resolution formulas with K_A = 0.
inline HorikawaResult horikawa_check(const HorikawaData& d, const Integer& l2, BaseSurface base = BaseSurface::abelian) {
  if (base != BaseSurface::abelian) throw DomainError("the resolution formulas are implemented for abelian bases only");
  d.validate();
  return detail::horikawa_from_xi(d.k2_hat, d.chi_hat, d.xi(), d.t, l2);
}

struct HorikawaSolution {
  Integer t;
  std::vector<Integer> xi;  // nondecreasing
  Integer l2;

  bool all_xi_one() const {
    for (const auto& x : xi)
      if (x != 1) return false;
    return true;
  }
  friend bool operator==(const HorikawaSolution&, const HorikawaSolution&) = default;
};

// Every (t, xi-profile) with t in [0, bound], at most `bound` singular points
// and xi_i in [1, bound] satisfying both formulas; L^2 is read off from the
// chi formula.
inline std::vector<HorikawaSolution> horikawa_solve(const Integer& k2_hat, const Integer& chi_hat, int bound) {
  if (bound < 0) throw DomainError("enumeration bound must be nonnegative");
  std::vector<HorikawaSolution> out;
  std::vector<Integer> xi;
  std::function<void(int)> rec = [&](int lo) {
    const Integer l2 = 2 * chi_hat + [&] {
      Integer tri = 0;
      for (const auto& x : xi) tri += x * (x - 1);
      return tri;
    }();
    const auto base = detail::horikawa_from_xi(k2_hat, chi_hat, xi, 0, l2);
    if (base.chi_consistent) {
      for (int t = 0; t <= bound; ++t)
        if (base.k2_star - t == base.k2_rhs) out.push_back({t, xi, l2});
    }
    if (static_cast<int>(xi.size()) == bound) return;
    for (int x = lo; x <= bound; ++x) {
      xi.push_back(x);
      rec(x);
      xi.pop_back();
    }
  };
  rec(1);
  return out;
}

// Solutions grouped by (t, L^2, whether every xi is 1).
struct SolutionClass {
  Integer t;
  Integer l2;
  bool all_xi_one = false;
  std::size_t members = 0;
  friend bool operator==(const SolutionClass& a, const SolutionClass& b) {
    return a.t == b.t && a.l2 == b.l2 && a.all_xi_one == b.all_xi_one;
  }
};

inline std::vector<SolutionClass> solution_classes(const std::vector<HorikawaSolution>& sols) {
  std::vector<SolutionClass> out;
  for (const auto& s : sols) {
    SolutionClass c{s.t, s.l2, s.all_xi_one(), 1};
    bool merged = false;
    for (auto& e : out)
      if (e == c) {
        ++e.members;
        merged = true;
      }
    if (!merged) out.push_back(c);
  }
  return out;
}

// Translation by a point of the given order fixes a class of the given
// degree iff degree times the point is zero.
inline bool class_translation_invariant(const Integer& degree, const Integer& torsion_order) {
  if (degree <= 0) throw DomainError("degree must be positive");
  if (torsion_order != 1 && torsion_order != 2) throw DomainError("torsion order must be 1 or 2");
  return degree % torsion_order == 0;
}

// A branch type is admissible when both factor degrees are fixed by the
// half-period translations.
inline bool branch_type_admissible(const BranchType& l, const Integer& torsion_order = 2) {
  return class_translation_invariant(l.a, torsion_order) && class_translation_invariant(l.b, torsion_order);
}

}  // namespace knlab::dc
