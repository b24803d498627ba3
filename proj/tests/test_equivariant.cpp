#include <gtest/gtest.h>

#include <vector>

#include "knlab/equivariant/canonical.hpp"
#include "knlab/equivariant/character.hpp"
#include "knlab/equivariant/linearization.hpp"
#include "support/samples.hpp"

using namespace knlab;
using namespace knlab::equiv;

namespace {

RationalMatrix diag(std::initializer_list<int> d) {
  RationalMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (int v : d) {
    m(i, i) = Rational(v);
    ++i;
  }
  return m;
}

DimensionTable table(int pp, int pm, int mp, int mm) { return DimensionTable{{pp, pm, mp, mm}}; }

// dim V^chi = 1/4 sum_g chi(g) tr rho(g): the character inner product.
DimensionTable dims_by_trace(const LinearizedSpace& s) {
  DimensionTable out;
  for (const auto& chi : CharacterG::all()) {
    Rational acc(0);
    for (const auto& g : GroupElement::all()) {
      const RationalMatrix r = s.rho(g);
      Rational tr(0);
      for (std::size_t i = 0; i < r.rows(); ++i) tr += r(i, i);
      acc += Rational(chi(g)) * tr;
    }
    acc /= Rational(4);
    EXPECT_TRUE(acc.is_integer());
    out[chi] = static_cast<int>(acc.numerator());
  }
  return out;
}

const rr::Divisor kH = origin_plus_half_period(1);
const rr::Divisor kV = origin_plus_half_period(2);

}  // namespace

TEST(Character, GroupStructure) {
  for (int i = 0; i < 4; ++i) {
    const CharacterG c = CharacterG::from_index(i);
    EXPECT_EQ(c.index(), i);
    EXPECT_EQ(c * c, CharacterG::trivial());
    EXPECT_EQ(CharacterG::parse(c.str()), c);
    for (int j = 0; j < 4; ++j) EXPECT_EQ((c * CharacterG::from_index(j)).index(), i ^ j);
  }
  EXPECT_EQ(CharacterG::from_index(1).str(), "+-");
  EXPECT_EQ(CharacterG::from_index(2).str(), "-+");
  EXPECT_THROW(CharacterG::parse("+"), DomainError);
  // Orthogonality of characters.
  for (const auto& a : CharacterG::all())
    for (const auto& b : CharacterG::all()) {
      int s = 0;
      for (const auto& g : GroupElement::all()) s += a(g) * b(g);
      EXPECT_EQ(s, a == b ? 4 : 0);
    }
}

TEST(ActionMatrix, OriginPlusHalfPeriod) {
  for (const auto& l : samples::suite_lambdas()) {
    const curve::LegendreCurve c(l);
    const auto b = rr::rr_space(c, kH);
    EXPECT_EQ(action_matrix(b, CurveSymmetry::negation()), diag({1, -1}));
    EXPECT_EQ(action_matrix(b, CurveSymmetry::translation()), diag({1, -1}));
    EXPECT_EQ(action_matrix(b, CurveSymmetry::identity()), RationalMatrix::identity(2));
  }
}

TEST(ActionMatrix, RejectsNonInvariantDivisor) {
  const curve::LegendreCurve c(Rational(3));
  const auto b = rr::rr_space(c, rr::Divisor::point(curve::Point::at_infinity(), 2));
  EXPECT_NO_THROW(action_matrix(b, CurveSymmetry::negation()));
  EXPECT_THROW(action_matrix(b, CurveSymmetry::translation()), DomainError);
}

TEST(EigenDims, TablesOfSectionSpaces) {
  for (const auto& l : samples::suite_lambdas()) {
    const curve::LegendreCurve c(l);
    const auto h = LinearizedSpace::natural(rr::rr_space(c, kH), FactorConvention::translation_first());
    const auto h_swapped = LinearizedSpace::natural(rr::rr_space(c, kH), FactorConvention::negation_first());
    const auto v1 = LinearizedSpace::natural(rr::rr_space(c, kV), FactorConvention::translation_first());
    const auto v2 = LinearizedSpace::natural(rr::rr_space(c, kV), FactorConvention::negation_first());
    EXPECT_EQ(eigen_dims(h).dims, table(1, 0, 0, 1));
    EXPECT_EQ(eigen_dims(h_swapped).dims, table(1, 0, 0, 1));
    EXPECT_EQ(eigen_dims(v1).dims, table(2, 0, 1, 1));
    EXPECT_EQ(eigen_dims(v2).dims, table(2, 1, 0, 1));
    for (const auto* s : {&h, &h_swapped, &v1, &v2}) EXPECT_EQ(eigen_dims(*s).dims, dims_by_trace(*s));
  }
}

TEST(EigenDims, V1EigenvectorsAreTheExpectedFunctions) {
  for (const auto& l : samples::suite_lambdas()) {
    const curve::LegendreCurve c(l);
    const auto d = eigen_dims(LinearizedSpace::natural(rr::rr_space(c, kV), FactorConvention::translation_first()));
    const RationalFunction lx(RationalPolynomial(l), RationalPolynomial::x());
    const rr::FunctionFieldElement u(c, RationalFunction::x() + lx);
    const rr::FunctionFieldElement v(c, RationalFunction::x() - lx);
    const rr::FunctionFieldElement psi(c, RationalFunction(), RationalFunction(RationalPolynomial(Rational(1)), RationalPolynomial::x()));
    const auto sections = rr::rr_space(c, kV);
    for (const auto& f : d.elements(CharacterG::parse("++")))
      EXPECT_EQ(rank(RationalMatrix::from_rows({*sections.coordinates(f), *sections.coordinates(rr::FunctionFieldElement::constant(c, Rational(1))),
                                                *sections.coordinates(u)},
                                               4)),
                2u);
    ASSERT_EQ(d.elements(CharacterG::parse("-+")).size(), 1u);
    ASSERT_EQ(d.elements(CharacterG::parse("--")).size(), 1u);
    const auto minus_plus = d.elements(CharacterG::parse("-+"))[0];
    const auto minus_minus = d.elements(CharacterG::parse("--"))[0];
    EXPECT_EQ(rank(RationalMatrix::from_rows({*sections.coordinates(minus_plus), *sections.coordinates(v)}, 4)), 1u);
    EXPECT_EQ(rank(RationalMatrix::from_rows({*sections.coordinates(minus_minus), *sections.coordinates(psi)}, 4)), 1u);
  }
}

TEST(EigenDims, EigenvectorsTransformByTheirCharacter) {
  for (const auto& l : samples::suite_lambdas()) {
    const curve::LegendreCurve c(l);
    for (const auto& conv : {FactorConvention::translation_first(), FactorConvention::negation_first()}) {
      const auto d = eigen_dims(LinearizedSpace::natural(rr::rr_space(c, kV), conv));
      for (const auto& chi : CharacterG::all())
        for (const auto& f : d.elements(chi))
          for (const auto& g : GroupElement::all()) EXPECT_EQ(f.pullback(conv(g)), Rational(chi(g)) * f);
      // First nonzero coordinate is 1.
      for (const auto& chi : CharacterG::all())
        for (const auto& v : d.basis(chi)) {
          auto it = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
          ASSERT_NE(it, v.end());
          EXPECT_EQ(*it, Rational(1));
        }
    }
  }
}

TEST(Projectors, IdempotentOrthogonalComplete) {
  for (const auto& l : samples::suite_lambdas()) {
    const curve::LegendreCurve c(l);
    for (int k = 1; k <= 3; ++k)
      for (const auto& conv : {FactorConvention::translation_first(), FactorConvention::negation_first()})
        for (const auto& twist : CharacterG::all()) {
          const auto s = LinearizedSpace::natural(rr::rr_space(c, origin_plus_half_period(k)), conv, twist);
          const std::size_t n = s.dimension();
          RationalMatrix sum(n, n);
          for (const auto& a : CharacterG::all()) {
            const RationalMatrix pa = s.projector(a);
            EXPECT_EQ(pa * pa, pa);
            sum = sum + pa;
            for (const auto& b : CharacterG::all())
              if (!(a == b)) { EXPECT_TRUE((pa * s.projector(b)).is_zero()); }
          }
          EXPECT_EQ(sum, RationalMatrix::identity(n));
          EXPECT_EQ(s.generators()[0] * s.generators()[1], s.generators()[1] * s.generators()[0]);
        }
  }
}

TEST(Twist, ShiftsTheTable) {
  const curve::LegendreCurve c(Rational(5, 3));
  const auto base = LinearizedSpace::natural(rr::rr_space(c, kV), FactorConvention::translation_first());
  const auto d0 = eigen_dims(base).dims;
  for (const auto& t : CharacterG::all()) {
    const auto dt = eigen_dims(base.twisted(t)).dims;
    for (const auto& chi : CharacterG::all()) EXPECT_EQ(dt[chi * t], d0[chi]);
    EXPECT_EQ(eigen_dims(base.twisted(t).twisted(t)).dims, d0);
  }
}

TEST(Twist, CanonicalTwistCharacter) {
  EXPECT_EQ(TwistCharacter::canonical().chi, CharacterG::parse("+-"));
}

TEST(LinearizedSpace, RejectsInvalidGenerators) {
  RationalMatrix not_involution{{Rational(2)}};
  EXPECT_THROW(LinearizedSpace({not_involution, RationalMatrix::identity(1)}), Error);
  RationalMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  EXPECT_THROW(LinearizedSpace({swap, diag({1, -1})}), Error);
}

TEST(ProductEigenDims, LedgerExamples) {
  const DimensionTable v1 = table(2, 0, 1, 1);
  const DimensionTable v2 = table(2, 1, 0, 1);
  const DimensionTable h = table(1, 0, 0, 1);
  EXPECT_EQ(product_eigen_dims(v1, v2, CharacterG::trivial())[CharacterG::trivial()], 5);
  EXPECT_EQ(product_eigen_dims(v1, v2, CharacterG::parse("--"))[CharacterG::trivial()], 5);
  EXPECT_EQ(product_eigen_dims(h, h, CharacterG::trivial())[CharacterG::trivial()], 2);
  for (const auto& t : CharacterG::all()) EXPECT_EQ(product_eigen_dims(v1, v2, t).total(), v1.total() * v2.total());
}

// The same table from an honest tensor product of the two representations.
TEST(ProductEigenDims, AgreesWithKroneckerProduct) {
  const curve::LegendreCurve c1(Rational(2)), c2(Rational(3));
  const auto s1 = LinearizedSpace::natural(rr::rr_space(c1, kV), FactorConvention::translation_first());
  const auto s2 = LinearizedSpace::natural(rr::rr_space(c2, kV), FactorConvention::negation_first());
  auto kron = [](const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t p = 0; p < b.rows(); ++p)
          for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
  };
  for (const auto& t : CharacterG::all()) {
    const LinearizedSpace prod({kron(s1.generators()[0], s2.generators()[0]), kron(s1.generators()[1], s2.generators()[1])}, t);
    EXPECT_EQ(eigen_dims(prod).dims, product_eigen_dims(eigen_dims(s1).dims, eigen_dims(s2).dims, t));
  }
}

TEST(CanonicalTable, EigentableAndGenus) {
  const std::vector<std::pair<Rational, Rational>> pairs{
      {Rational(2), Rational(3)}, {Rational(3), Rational(5, 3)}, {Rational(5, 3), Rational(-1)}, {Rational(-1), Rational(2)}};
  for (const auto& [l1, l2] : pairs) {
    const CanonicalLedger led = canonical_eigen_table(l1, l2);
    EXPECT_EQ(led.total[CharacterG::parse("--")], 1);
    EXPECT_EQ(led.total[CharacterG::parse("+-")], 2);
    EXPECT_EQ(led.total[CharacterG::parse("-+")], 2);
    EXPECT_EQ(led.total[CharacterG::parse("++")], 0);
    EXPECT_EQ(led.geometric_genus(), 0);
    EXPECT_EQ(led.total.total(), 5);
    EXPECT_EQ(led.summand_b.total(), led.h1.total() * led.h2.total());
    EXPECT_EQ(led.volume, CharacterG::parse("--"));
  }
}

TEST(CanonicalTable, GenusDoesNotDependOnTheSignOfTheFibreTwist) {
  for (const auto& w : {CharacterG::parse("+-"), CharacterG::parse("-+")}) {
    const CanonicalLedger led = canonical_eigen_table(Rational(2), Rational(3), TwistCharacter{w});
    EXPECT_EQ(led.geometric_genus(), 0);
    EXPECT_EQ(led.total, table(0, 2, 2, 1));
  }
}

TEST(IrregularityLedger, InvariantOneForms) {
  EXPECT_EQ(differential_character(FactorConvention::translation_first()), CharacterG::parse("+-"));
  EXPECT_EQ(differential_character(FactorConvention::negation_first()), CharacterG::parse("-+"));
  EXPECT_EQ(irregularity_ledger(), 0);
  EXPECT_EQ(invariant_one_forms({}), 2);
  EXPECT_EQ(invariant_one_forms({{1, 1}}), 0);
}
