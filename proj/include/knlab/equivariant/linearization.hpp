#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knlab/equivariant/character.hpp"
#include "knlab/error.hpp"
#include "knlab/exact/matrix.hpp"
#include "knlab/rr/riemann_roch.hpp"

namespace knlab::equiv {

using curve::CurveSymmetry;
using curve::LegendreCurve;
using rr::FunctionFieldElement;
using rr::RRBasis;

// Which curve symmetries realize g1 and g2 on one factor.
struct FactorConvention {
  CurveSymmetry g1;
  CurveSymmetry g2;

  // g1 translates by T and g2 negates (first factor).
  static FactorConvention translation_first() { return {CurveSymmetry::translation(), CurveSymmetry::negation()}; }
  // g1 negates and g2 translates by T (second factor).
  static FactorConvention negation_first() { return {CurveSymmetry::negation(), CurveSymmetry::translation()}; }

  CurveSymmetry operator()(GroupElement g) const {
    CurveSymmetry s = CurveSymmetry::identity();
    if (g.a1) s = s * g1;
    if (g.a2) s = s * g2;
    return s;
  }
};

// Matrix of f -> f o s^{-1} on the basis B (columns are images).
inline RationalMatrix action_matrix(const RRBasis& b, const CurveSymmetry& s) {
  if (!(b.divisor.transformed(b.curve, s) == b.divisor)) {
    throw DomainError("divisor " + b.divisor.str() + " is not invariant under " + s.str());
  }
  const std::size_t n = b.dimension();
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    // Every symmetry here is an involution, so s^{-1} = s.
    const auto image = b.basis[k].pullback(s);
    const auto coords = b.coordinates(image);
    if (!coords) throw Error("pullback of " + b.basis[k].str() + " left L(D)");
    for (std::size_t i = 0; i < n; ++i) m(i, k) = (*coords)[i];
  }
  return m;
}

// A representation of G given by the matrices of g1 and g2, possibly
// multiplied by a character.
class LinearizedSpace {
 public:
  LinearizedSpace(std::array<RationalMatrix, 2> generators, CharacterG twist = CharacterG::trivial())
      : gens_(std::move(generators)), twist_(twist) {
    const std::size_t n = gens_[0].rows();
    const RationalMatrix id = RationalMatrix::identity(n);
    for (const auto& g : gens_) {
      if (g.rows() != n || g.cols() != n) throw DomainError("generator matrices must be square of equal size");
      if (!(g * g == id)) throw Error("generator matrix does not square to the identity");
    }
    if (!(gens_[0] * gens_[1] == gens_[1] * gens_[0])) throw Error("generator matrices do not commute");
  }

  // Natural action on L(D) for a factor convention.
  static LinearizedSpace natural(const RRBasis& b, const FactorConvention& conv, CharacterG twist = CharacterG::trivial()) {
    LinearizedSpace s({action_matrix(b, conv.g1), action_matrix(b, conv.g2)}, twist);
    s.basis_ = b;
    return s;
  }

  std::size_t dimension() const { return gens_[0].rows(); }
  const std::array<RationalMatrix, 2>& generators() const { return gens_; }
  CharacterG twist() const { return twist_; }
  const std::optional<RRBasis>& sections() const { return basis_; }

  LinearizedSpace twisted(CharacterG by) const {
    LinearizedSpace s = *this;
    s.twist_ = twist_ * by;
    return s;
  }

  // rho(g), including the twist.
  RationalMatrix rho(GroupElement g) const {
    RationalMatrix m = RationalMatrix::identity(dimension());
    if (g.a1) m = m * gens_[0];
    if (g.a2) m = m * gens_[1];
    return Rational(twist_(g)) * m;
  }

  // P_chi = 1/4 sum_g chi(g) rho(g).
  RationalMatrix projector(CharacterG chi) const {
    RationalMatrix p(dimension(), dimension());
    for (const auto& g : GroupElement::all()) p = p + Rational(chi(g)) * rho(g);
    return Rational(1, 4) * p;
  }

 private:
  std::array<RationalMatrix, 2> gens_;
  CharacterG twist_;
  std::optional<RRBasis> basis_;
};

// Bases of the character eigenspaces, as coordinate vectors in the basis of
// the underlying space.
struct EigenDecomposition {
  std::array<std::vector<RationalVector>, 4> bases;
  DimensionTable dims;
  std::optional<RRBasis> sections;

  const std::vector<RationalVector>& basis(CharacterG c) const { return bases[static_cast<std::size_t>(c.index())]; }

  // The eigenvectors as functions, when the space is a section space.
  std::vector<FunctionFieldElement> elements(CharacterG c) const {
    if (!sections) throw DomainError("eigen decomposition has no underlying section space");
    std::vector<FunctionFieldElement> out;
    for (const auto& v : basis(c)) out.push_back(sections->combination(v));
    return out;
  }
};

// Column space of each projector in echelon form with first nonzero
// coordinate equal to 1.
inline EigenDecomposition eigen_dims(const LinearizedSpace& s) {
  EigenDecomposition out;
  out.sections = s.sections();
  const std::size_t n = s.dimension();
  for (const auto& chi : CharacterG::all()) {
    RationalMatrix pt = s.projector(chi).transpose();
    const auto pivots = rref_in_place(pt);
    auto& b = out.bases[static_cast<std::size_t>(chi.index())];
    for (std::size_t k = 0; k < pivots.size(); ++k) b.push_back(pt.row_vector(k));
    out.dims[chi] = static_cast<int>(pivots.size());
  }
  if (out.dims.total() != static_cast<int>(n)) throw Error("eigenspace dimensions do not add up to the dimension");
  return out;
}

}  // namespace knlab::equiv
