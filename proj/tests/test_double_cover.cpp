#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <vector>

#include "knlab/double_cover/invariants.hpp"

using namespace knlab;
using namespace knlab::dc;

namespace {

// Independent brute force with machine integers: all (t, profile) with
// t, profile length and entries bounded, straight substitution.
struct Brute {
  int t;
  std::vector<int> xi;
  int l2;
};

std::vector<Brute> brute(int k2, int chi, int bound) {
  std::vector<Brute> out;
  std::vector<int> xi;
  auto visit = [&](const std::vector<int>& p) {
    for (int l2 = 0; l2 <= 4 * chi + 4 * bound * bound * bound + 8; l2 += 2) {
      int sq = 0, tri = 0;
      for (int x : p) {
        sq += (x - 1) * (x - 1);
        tri += x * (x - 1);
      }
      if (2 * chi != l2 - tri) continue;
      for (int t = 0; t <= bound; ++t)
        if (k2 - t == 2 * l2 - 2 * sq) out.push_back({t, p, l2});
    }
  };
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    visit(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (int x = lo; x <= bound; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

TEST(CoverInvariants, Examples) {
  EXPECT_EQ(cover_invariants({2, 2}), (SurfaceInvariants{16, 4}));
  EXPECT_EQ(cover_invariants({1, 4}), (SurfaceInvariants{16, 4}));
  EXPECT_EQ(cover_invariants({1, 1}), (SurfaceInvariants{4, 1}));
  EXPECT_THROW(BranchType(-1, 2), DomainError);
}

TEST(CoverInvariants, FormulasForManyTypes) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const auto inv = cover_invariants({a, b});
      EXPECT_EQ(inv.k2, 4 * a * b);
      EXPECT_EQ(inv.chi, a * b);
      EXPECT_EQ(inv.k2, 4 * inv.chi);
    }
}

TEST(QuotientInvariants, Examples) {
  EXPECT_EQ(quotient_invariants(16, 4, 4), (SurfaceInvariants{4, 1}));
  EXPECT_EQ(quotient_invariants(16, 4, 1), (SurfaceInvariants{16, 4}));
  EXPECT_THROW(quotient_invariants(16, 4, 3), DomainError);
  EXPECT_THROW(quotient_invariants(16, 4, 0), DomainError);
  EXPECT_THROW(quotient_invariants(16, 6, 4), DomainError);
}

TEST(QuotientInvariants, KeumNaieConfiguration) {
  const auto hat = cover_invariants({2, 2});
  EXPECT_EQ(quotient_invariants(hat.k2, hat.chi, 4), (SurfaceInvariants{4, 1}));
}

TEST(HorikawaCheck, Examples) {
  EXPECT_TRUE(horikawa_check({16, 4, {}, 0}, 8).consistent);

  const auto r = horikawa_check({16, 4, {4}, 0}, 10);
  EXPECT_EQ(r.k2_rhs, 18);
  EXPECT_FALSE(r.k2_consistent);
  EXPECT_FALSE(r.consistent);

  for (int t = 0; t <= 4; ++t)
    for (int l2 = 4; l2 <= 12; l2 += 2) {
      const bool ok = horikawa_check({16, 4, {2, 2, 2}, t}, l2).consistent;
      EXPECT_EQ(ok, t == 0 && l2 == 8) << "t=" << t << " L2=" << l2;
    }
}

TEST(HorikawaCheck, Guards) {
  EXPECT_THROW(horikawa_check({16, 4, {1}, 0}, 8), DomainError);
  EXPECT_THROW(horikawa_check({16, 4, {}, -1}, 8), DomainError);
  EXPECT_THROW(horikawa_check({16, 4, {}, 0}, 7), DomainError);
  EXPECT_THROW(horikawa_check({16, 4, {}, 0}, 8, BaseSurface::other), DomainError);
}

TEST(HorikawaCheck, OddMultiplicitiesShareXi) {
  EXPECT_EQ(horikawa_check({16, 4, {5}, 0}, 10).k2_rhs, horikawa_check({16, 4, {4}, 0}, 10).k2_rhs);
}

TEST(HorikawaSolve, UniqueClassAtBoundTen) {
  const auto sols = horikawa_solve(16, 4, 10);
  const auto classes = solution_classes(sols);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].t, 0);
  EXPECT_EQ(classes[0].l2, 8);
  EXPECT_TRUE(classes[0].all_xi_one);
  // One solution per number of singular points 0..10.
  EXPECT_EQ(sols.size(), 11u);
}

TEST(HorikawaSolve, BoundZero) {
  const auto sols = horikawa_solve(16, 4, 0);
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].t, 0);
  EXPECT_TRUE(sols[0].xi.empty());
  EXPECT_EQ(sols[0].l2, 8);
  EXPECT_THROW(horikawa_solve(16, 4, -1), DomainError);
}

TEST(HorikawaSolve, StableInTheBound) {
  const auto ref = solution_classes(horikawa_solve(16, 4, 1));
  for (int b : {5, 10}) EXPECT_EQ(solution_classes(horikawa_solve(16, 4, b)), ref) << b;
}

TEST(HorikawaSolve, EverySolutionChecksConsistent) {
  for (int chi : {3, 4}) {
    for (const auto& s : horikawa_solve(16, chi, 6)) {
      std::vector<Integer> m;
      for (const auto& x : s.xi) m.push_back(2 * x);
      EXPECT_TRUE(horikawa_check({16, chi, m, s.t}, s.l2).consistent);
    }
  }
}

TEST(HorikawaSolve, CounterfactualChiUsesInputs) {
  const auto sols = horikawa_solve(16, 3, 10);
  std::set<int> l2s;
  for (const auto& s : sols) l2s.insert(static_cast<int>(s.l2));
  EXPECT_EQ(l2s, (std::set<int>{6, 8, 10, 12}));
  bool has_family = false;
  for (const auto& c : solution_classes(sols)) has_family = has_family || (c.l2 == 6 && c.all_xi_one && c.t == 4);
  EXPECT_TRUE(has_family);
}

TEST(HorikawaSolve, AgreesWithBruteForce) {
  for (int chi : {2, 3, 4, 5})
    for (int bound : {0, 2, 4}) {
      const auto a = horikawa_solve(16, chi, bound);
      const auto b = brute(16, chi, bound);
      ASSERT_EQ(a.size(), b.size()) << chi << " " << bound;
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<int> xi;
        for (const auto& x : a[i].xi) xi.push_back(static_cast<int>(x));
        bool found = false;
        for (const auto& s : b) found = found || (s.t == a[i].t && s.xi == xi && s.l2 == a[i].l2);
        EXPECT_TRUE(found);
      }
    }
}

TEST(TranslationInvariance, Examples) {
  EXPECT_FALSE(class_translation_invariant(1, 2));
  EXPECT_TRUE(class_translation_invariant(2, 2));
  EXPECT_TRUE(class_translation_invariant(4, 1));
  EXPECT_THROW(class_translation_invariant(2, 3), DomainError);
  EXPECT_THROW(class_translation_invariant(0, 2), DomainError);
}

TEST(TranslationInvariance, EvenDegreeCriterion) {
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(class_translation_invariant(d, 2), d % 2 == 0) << d;
}

TEST(TranslationInvariance, BranchTypes) {
  EXPECT_TRUE(branch_type_admissible({2, 2}));
  EXPECT_FALSE(branch_type_admissible({1, 4}));
  EXPECT_FALSE(branch_type_admissible({4, 1}));
  EXPECT_TRUE(branch_type_admissible({1, 4}, 1));
}
