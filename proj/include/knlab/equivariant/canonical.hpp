#pragma once

#include <array>

#include "knlab/equivariant/character.hpp"
#include "knlab/equivariant/linearization.hpp"
#include "knlab/rr/riemann_roch.hpp"

namespace knlab::equiv {

// Character of the invariant differential dz on a factor: g acts on dz by
// the sign of its linear part.
inline CharacterG differential_character(const FactorConvention& conv) { return {conv.g1.sign, conv.g2.sign}; }

// L([O] + [T]) and L(2[O] + 2[T]) with the natural action.
inline rr::Divisor origin_plus_half_period(int k = 1) {
  return rr::Divisor::point(curve::Point::at_infinity(), k) + rr::Divisor::point(curve::torsion_point(), k);
}

inline EigenDecomposition natural_decomposition(const LegendreCurve& c, int k, const FactorConvention& conv) {
  return eigen_dims(LinearizedSpace::natural(rr::rr_space(c, origin_plus_half_period(k)), conv));
}

// H^0 of the canonical sheaf of the double cover of E1 x E2 branched on a
// divisor in |2L|, L = ([O] + [T]) x ([O] + [T]), split by character.
// Summand a) is spanned by dz1 ^ dz2. Summand b) consists of
// phi1 phi2 dz1 ^ dz2 / w with phi_i in L([O] + [T]).
struct CanonicalLedger {
  DimensionTable h1;
  DimensionTable h2;
  CharacterG dz1;
  CharacterG dz2;
  CharacterG volume;
  CharacterG w;
  DimensionTable summand_a;
  DimensionTable summand_b;
  DimensionTable total;

  int geometric_genus() const { return total[CharacterG::trivial()]; }
};

inline CanonicalLedger canonical_eigen_table(const Rational& lambda1, const Rational& lambda2,
                                             TwistCharacter w = TwistCharacter::canonical()) {
  const FactorConvention conv1 = FactorConvention::translation_first();
  const FactorConvention conv2 = FactorConvention::negation_first();
  CanonicalLedger out;
  out.h1 = natural_decomposition(LegendreCurve(lambda1), 1, conv1).dims;
  out.h2 = natural_decomposition(LegendreCurve(lambda2), 1, conv2).dims;
  out.dz1 = differential_character(conv1);
  out.dz2 = differential_character(conv2);
  out.volume = out.dz1 * out.dz2;
  out.w = w.chi;
  out.summand_a[out.volume] = 1;
  // Characters are real, so dividing by w is multiplying by it.
  out.summand_b = product_eigen_dims(out.h1, out.h2, out.volume * out.w);
  for (const auto& c : CharacterG::all()) out.total[c] = out.summand_a[c] + out.summand_b[c];
  return out;
}

// Number of invariant holomorphic 1-forms among dz1, dz2 for the group
// generated by the given elements (pass none for the trivial group).
inline int invariant_one_forms(const std::vector<GroupElement>& generators) {
  int count = 0;
  for (const auto& chi : {differential_character(FactorConvention::translation_first()),
                          differential_character(FactorConvention::negation_first())}) {
    bool fixed = true;
    for (const auto& g : generators) fixed = fixed && chi(g) == 1;
    count += fixed ? 1 : 0;
  }
  return count;
}

inline int irregularity_ledger() { return invariant_one_forms({{1, 0}, {0, 1}}); }

}  // namespace knlab::equiv
