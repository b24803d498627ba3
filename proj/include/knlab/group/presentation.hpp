#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "knlab/error.hpp"
#include "knlab/exact/smith.hpp"
#include "knlab/group/affine.hpp"

namespace knlab::group {

struct GroupPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::string> relators;
};

// Gamma on gamma1, gamma2, e1', e2'. The last relator encodes
// gamma2 gamma1 = t_{e2} t_{e1}^{-1} gamma1 gamma2 with e1 = gamma1^2 and
// e2 = gamma2^2.
inline GroupPresentation gamma_presentation() {
  return {"Gamma",
          {"g1", "g2", "e1'", "e2'"},
          {"g1 e1' g1^-1 e1'^-1", "g2 e2' g2^-1 e2'^-1", "e1' e2' e1'^-1 e2'^-1", "g1 e2' g1^-1 e2'",
           "g2 e1' g2^-1 e1'", "g1 g2^2 g1^-1 g2^2", "g2 g1^2 g2^-1 g1^2", "(g2 g1) (g1 g2)^-1 g1^2 g2^-2"}};
}

// Gamma_1 = { eps1 = + } on gamma1, e1', e2, e2'.
inline GroupPresentation gamma1_presentation() {
  return {"Gamma_1",
          {"g1", "e1'", "e2", "e2'"},
          {"g1 e1' g1^-1 e1'^-1", "e1' e2 e1'^-1 e2^-1", "e1' e2' e1'^-1 e2'^-1", "e2 e2' e2^-1 e2'^-1",
           "g1 e2 g1^-1 e2", "g1 e2' g1^-1 e2'"}};
}

// Gamma_2 = { eps2 = + } on e1, e1', gamma2, e2'.
inline GroupPresentation gamma2_presentation() {
  return {"Gamma_2",
          {"e1", "e1'", "g2", "e2'"},
          {"g2 e2' g2^-1 e2'^-1", "e1 e1' e1^-1 e1'^-1", "e2' e1 e2'^-1 e1^-1", "e2' e1' e2'^-1 e1'^-1",
           "g2 e1 g2^-1 e1", "g2 e1' g2^-1 e1'"}};
}

inline GroupPresentation free_presentation(std::size_t rank) {
  GroupPresentation p{"free", {}, {}};
  const char* names[] = {"g1", "g2", "e1", "e1'", "e2", "e2'"};
  if (rank > 6) throw DomainError("free presentation supports at most 6 generators");
  for (std::size_t i = 0; i < rank; ++i) p.generators.push_back(names[i]);
  return p;
}

struct RelatorCheck {
  std::string relator;
  AffineElement value;
  bool holds = false;
};

// Evaluates every relator under the standard assignment.
inline std::vector<RelatorCheck> verify_presentation(const GroupPresentation& p) {
  std::vector<RelatorCheck> out;
  for (const auto& r : p.relators) {
    const Word w = parse_word(r);
    for (const auto& [s, n] : w) {
      bool known = false;
      for (const auto& g : p.generators) known = known || detail::canonical_symbol(g) == s;
      if (!known) throw DomainError("relator '" + r + "' uses '" + s + "', which is not a generator of " + p.name);
    }
    const AffineElement v = evaluate(w);
    out.push_back({r, v, v.is_identity()});
  }
  return out;
}

// Exponent sums of each relator: one row per relator, one column per generator.
inline IntegerMatrix relation_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (const auto& [s, n] : parse_word(p.relators[i])) {
      std::size_t j = 0;
      while (j < p.generators.size() && detail::canonical_symbol(p.generators[j]) != s) ++j;
      if (j == p.generators.size()) throw DomainError("symbol '" + s + "' is not a generator of " + p.name);
      m(i, j) += n;
    }
  }
  return m;
}

using AbelianInvariants = SmithForm;

// Abelianization; the relators must hold in the affine model first.
inline AbelianInvariants abelianization(const GroupPresentation& p) {
  for (const auto& c : verify_presentation(p)) {
    if (!c.holds) throw Error("relator '" + c.relator + "' of " + p.name + " evaluates to " + c.value.str());
  }
  return smith_normal_form(relation_matrix(p));
}

// Elements of the finite quotient Gamma / 2 Lambda: shifts are reduced
// modulo 2 in lattice units.
inline AffineElement reduce_mod_2lattice(AffineElement a) {
  for (auto& v : a.shift2) v = ((v % 4) + 4) % 4;
  return a;
}

// Closure of the generators' images in Gamma / 2 Lambda.
inline std::set<AffineElement> generated_quotient(const std::vector<std::string>& generators) {
  std::vector<AffineElement> gens;
  for (const auto& g : generators) gens.push_back(reduce_mod_2lattice(symbol_value(detail::canonical_symbol(g))));
  std::set<AffineElement> seen{AffineElement::identity()};
  std::vector<AffineElement> frontier{AffineElement::identity()};
  while (!frontier.empty()) {
    std::vector<AffineElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        const AffineElement y = reduce_mod_2lattice(x * g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

// [Gamma : H 2Lambda] by counting images in the order-64 quotient
// Gamma / 2 Lambda. Equals [Gamma : H] when H contains 2 Lambda.
inline std::size_t index_in_gamma(const GroupPresentation& sub) {
  const std::size_t whole = generated_quotient(gamma_presentation().generators).size();
  const std::size_t part = generated_quotient(sub.generators).size();
  if (whole % part != 0) throw Error("subgroup order does not divide the group order");
  return whole / part;
}

// The map psi: Gamma^ab -> Z/4 + (Z/2)^3 on the generators gamma1, gamma2,
// e1', e2'.
struct H1Check {
  std::vector<std::array<int, 4>> relator_images;
  bool well_defined = false;
  bool surjective = false;
  Integer source_order = 0;
  bool isomorphism = false;
};

inline H1Check h1_isomorphism_check() {
  const std::array<int, 4> moduli{4, 2, 2, 2};
  const std::array<std::array<int, 4>, 4> psi{{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  const GroupPresentation p = gamma_presentation();
  const IntegerMatrix rel = relation_matrix(p);

  H1Check out;
  out.well_defined = true;
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    std::array<int, 4> img{0, 0, 0, 0};
    for (std::size_t j = 0; j < rel.cols(); ++j)
      for (std::size_t k = 0; k < 4; ++k) img[k] += static_cast<int>(rel(i, j)) * psi[j][k];
    for (std::size_t k = 0; k < 4; ++k) img[k] = ((img[k] % moduli[k]) + moduli[k]) % moduli[k];
    out.well_defined = out.well_defined && img == std::array<int, 4>{0, 0, 0, 0};
    out.relator_images.push_back(img);
  }

  std::set<std::array<int, 4>> reached{{0, 0, 0, 0}};
  std::vector<std::array<int, 4>> frontier{{0, 0, 0, 0}};
  while (!frontier.empty()) {
    std::vector<std::array<int, 4>> next;
    for (const auto& x : frontier)
      for (const auto& g : psi) {
        std::array<int, 4> y;
        for (std::size_t k = 0; k < 4; ++k) y[k] = (x[k] + g[k]) % moduli[k];
        if (reached.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  out.surjective = reached.size() == 32;
  const SmithForm ab = abelianization(p);
  out.source_order = ab.free_rank == 0 ? ab.torsion_order() : Integer(0);
  // A surjection between finite groups of equal order is a bijection.
  out.isomorphism = out.well_defined && out.surjective && out.source_order == 32;
  return out;
}

}  // namespace knlab::group
