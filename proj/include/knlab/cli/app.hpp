#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knlab/cli/report.hpp"
#include "knlab/double_cover/invariants.hpp"
#include "knlab/equivariant/canonical.hpp"
#include "knlab/error.hpp"
#include "knlab/exact/smith.hpp"
#include "knlab/group/affine.hpp"
#include "knlab/group/presentation.hpp"
#include "knlab/kn/bicanonical.hpp"
#include "knlab/kn/surface.hpp"

namespace knlab::cli {

enum class Fault { none, relator_sign, z4_scale, chi_hat };

inline Fault parse_fault(const std::string& s) {
  if (s.empty() || s == "none") return Fault::none;
  if (s == "relator-sign") return Fault::relator_sign;
  if (s == "z4-scale") return Fault::z4_scale;
  if (s == "chi-hat") return Fault::chi_hat;
  throw DomainError("unknown fault '" + s + "'");
}

inline std::string fault_name(Fault f) {
  switch (f) {
    case Fault::relator_sign: return "relator-sign";
    case Fault::z4_scale: return "z4-scale";
    case Fault::chi_hat: return "chi-hat";
    default: return "none";
  }
}

// Usage problems map to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline Rational parse_lambda(const std::string& text) {
  Rational l;
  try {
    l = Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError("lambda '" + text + "' is not an exact rational p/q: " + e.what());
  }
  if (l.is_zero() || l == Rational(1)) throw UsageError("lambda must differ from 0 and 1, got " + text);
  return l;
}

inline std::array<Rational, 5> parse_coeffs(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 5) throw UsageError("--coeffs needs exactly 5 comma-separated rationals");
  std::array<Rational, 5> c;
  bool nonzero = false;
  for (std::size_t k = 0; k < 5; ++k) {
    try {
      c[k] = Rational::parse(parts[k]);
    } catch (const Error& e) {
      throw UsageError("coefficient '" + parts[k] + "' is not an exact rational p/q: " + e.what());
    }
    nonzero = nonzero || !c[k].is_zero();
  }
  if (!nonzero) throw UsageError("branch coefficients must not all vanish");
  return c;
}

inline double parse_precision(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("precision '" + text + "' is not a number");
  }
  if (used != text.size() || !(v > 0) || !std::isfinite(v)) throw UsageError("precision must be a positive number");
  return v;
}

// Flag, then environment, then the default.
inline double resolve_precision(const std::string& flag, const std::optional<std::string>& env) {
  if (!flag.empty()) return parse_precision(flag);
  if (env && !env->empty()) return parse_precision(*env);
  return kn::kDefaultPrecision;
}

inline Json table_json(const equiv::DimensionTable& t) { return Json::array({t.dims[0], t.dims[1], t.dims[2], t.dims[3]}); }

inline Json point_json(const curve::ComplexPoint& p) {
  return Json{{"x", {p.x.real(), p.x.imag()}}, {"y", {p.y.real(), p.y.imag()}}};
}

inline Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

// Runs fn and records a failed check if it throws.
inline void guarded(Report& r, const std::string& name, const std::string& ref, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    r.fail(name, ref, e.what());
  }
}

inline const std::vector<std::string>& suite_lambda_strings() {
  static const std::vector<std::string> v{"2", "3", "5/3", "-1"};
  return v;
}

inline const std::vector<std::pair<std::string, std::string>>& suite_pairs() {
  static const std::vector<std::pair<std::string, std::string>> v{{"2", "3"}, {"3", "5/3"}, {"5/3", "-1"}, {"-1", "2"}};
  return v;
}

// ---- per-factor eigenspace checks ----

inline void add_curve_checks(Report& r, const std::string& ls) {
  const Rational l = Rational::parse(ls);
  const curve::LegendreCurve c(l);
  const auto t1 = equiv::FactorConvention::translation_first();
  const auto t2 = equiv::FactorConvention::negation_first();
  const std::string at = " at lambda=" + ls;
  guarded(r, "L([O]+[T]) table" + at, "L([O]+[T]) = V++ + V--", [&] {
    r.expect("L([O]+[T]) table (++,+-,-+,--)" + at, "L([O]+[T]) = V++ + V--, both 1-dimensional",
             table_json(equiv::natural_decomposition(c, 1, t1).dims), Json::array({1, 0, 0, 1}));
  });
  guarded(r, "L(2[O]+2[T]) tables" + at, "L(2[O]+2[T]) character tables", [&] {
    r.expect("L(2[O]+2[T]) table, g1 translates" + at, "dims (2,0,1,1)",
             table_json(equiv::natural_decomposition(c, 2, t1).dims), Json::array({2, 0, 1, 1}));
    r.expect("L(2[O]+2[T]) table, g1 negates" + at, "dims (2,1,0,1)",
             table_json(equiv::natural_decomposition(c, 2, t2).dims), Json::array({2, 1, 0, 1}));
  });
  guarded(r, "projectors" + at, "P_chi^2 = P_chi, P_chi P_psi = 0", [&] {
    const auto s = equiv::LinearizedSpace::natural(rr::rr_space(c, equiv::origin_plus_half_period(2)), t1);
    bool ok = true;
    RationalMatrix sum(s.dimension(), s.dimension());
    for (const auto& a : equiv::CharacterG::all()) {
      const auto pa = s.projector(a);
      ok = ok && pa * pa == pa;
      sum = sum + pa;
      for (const auto& b : equiv::CharacterG::all())
        if (!(a == b)) ok = ok && (pa * s.projector(b)).is_zero();
    }
    ok = ok && sum == RationalMatrix::identity(s.dimension());
    r.require("projectors idempotent, orthogonal, complete" + at, "P_chi^2 = P_chi, P_chi P_psi = 0, sum = 1", ok);
  });
}

// ---- per-surface checks ----

inline void add_surface_checks(Report& r, const std::string& l1s, const std::string& l2s, Fault fault,
                               double precision) {
  const Rational l1 = Rational::parse(l1s), l2 = Rational::parse(l2s);
  const std::string at = " at (" + l1s + "," + l2s + ")";
  guarded(r, "surface data" + at, "invariant (4,4) sections", [&] {
    const kn::KeumNaieData d(l1, l2);
    const auto b = kn::invariant_branch_basis(d);
    r.expect("invariant (4,4) sections" + at, "H0(L)^G = V1++ (x) V2++ + V1-- (x) V2--, dim 5", b.invariant_dim, 5);
    r.expect("anti-invariant (4,4) sections" + at, "H0(L)^{--} = C^2 + C^2 + C, dim 5", b.anti_invariant_dim, 5);
    r.require("branch basis exactly invariant, rank 5" + at, "g* f = f for f in H0(L)^G",
              b.all_invariant && b.rank == 5);

    const auto canon = equiv::canonical_eigen_table(l1, l2);
    r.expect("H0(K) table (++,+-,-+,--)" + at, "H0(K_X^)^{--,+-,-+,++} = (1,2,2,0)", table_json(canon.total),
             Json::array({0, 2, 2, 1}));
    r.expect("p_g" + at, "p_g(S) = dim H0(K_X^)^{++} = 0", canon.geometric_genus(), 0);
    r.expect("h0(K_X^)" + at, "h0(K_X^) = 1 + 2 * 2 = 5", canon.total.total(), 5);

    const auto pts = kn::fixed_points(d, precision);
    double res = 0;
    for (const auto& p : pts)
      res = std::max({res, curve::curve_residual(d.e1.curve, p.p1), curve::curve_residual(d.e2.curve, p.p2)});
    r.expect("fixed points of g1 g2" + at, "g1 g2 has 16 fixed points", pts.size(), 16);
    r.bound("fixed point curve residual" + at, "2R = T on each factor", res, 1e-10);

    const auto f = kn::branch_section(b, kn::random_coefficients(1));
    const auto fa = kn::free_action_check(d, f, precision);
    r.bound("free action margin, seed 1" + at, "{f = 0} misses Fix(g1 g2)", fa.margin, precision, true);
    std::array<Rational, 5> scaled = kn::random_coefficients(1);
    for (auto& c : scaled) c = Rational(-7, 3) * c;
    const double m2 = kn::free_action_check(d, kn::branch_section(b, scaled), precision).margin;
    r.bound("free action margin scale invariance" + at, "margin(c f) = margin(f)", std::abs(m2 - fa.margin),
            1e-12 * (1 + fa.margin));

    auto z = kn::bicanonical_basis(d);
    if (fault == Fault::z4_scale) z.z[4] = Rational(2) * z.z[4];
    const auto id = kn::check_identities(z);
    r.require("z0 z3 - z1 z2 exact zero" + at, "Q1 = {z0 z3 - z1 z2 = 0}", id.q1_exact_zero,
              id.q1_exact_zero ? "exact zero" : "nonzero");
    r.require("z4^2 - z0 z3 exact zero" + at, "Q2 = {z4^2 - z0 z3 = 0}", id.q2_exact_zero,
              id.q2_exact_zero ? "exact zero" : "nonzero");
    const auto pb = kn::pullback_consistency_check(z, 100, 1e-9);
    r.bound("quadric residual at 100 random points" + at, "z factors through E1 x E2", pb.max_residual, 1e-9);
  });
}

// ---- group checks ----

inline group::GroupPresentation presentation_for(const std::string& subject, Fault fault) {
  group::GroupPresentation p;
  if (subject == "gamma") {
    p = group::gamma_presentation();
    if (fault == Fault::relator_sign) p.relators.back() = "(g2 g1) (g1 g2)^-1 g2^2 g1^-2";
  } else if (subject == "gamma1") {
    p = group::gamma1_presentation();
  } else if (subject == "gamma2") {
    p = group::gamma2_presentation();
  } else {
    throw UsageError("unknown subject '" + subject + "'");
  }
  return p;
}

inline void add_group_checks(Report& r, const std::string& subject, Fault fault) {
  const auto p = presentation_for(subject, fault);
  const auto checks = group::verify_presentation(p);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    r.add({p.name + " relator " + std::to_string(i + 1) + ": " + checks[i].relator, "relators hold in Aff(C^2)",
           checks[i].holds, checks[i].value.str(), group::AffineElement::identity().str(), 0});
  }
  const bool gamma = subject == "gamma";
  const std::string ref = gamma ? "H1(Gamma) = Z/4 + (Z/2)^3" : "Gamma_i^ab = Lambda_i + (Z/2)^2";
  guarded(r, "abelianization(" + p.name + ")", ref, [&] {
    const auto ab = group::abelianization(p);
    const Json value{{"free_rank", ab.free_rank}, {"factors", integers_json(ab.factors)}, {"group", ab.str()}};
    Json expected = gamma ? Json{{"free_rank", 0}, {"factors", {"2", "2", "2", "4"}}, {"group", "Z/2 + Z/2 + Z/2 + Z/4"}}
                          : Json{{"free_rank", 2}, {"factors", {"2", "2"}}, {"group", "Z^2 + Z/2 + Z/2"}};
    r.expect("abelianization(" + p.name + ")", ref, value, expected);
  });
}

inline void add_gamma_structure_checks(Report& r) {
  using group::evaluate;
  r.require("gamma1^2 = t_e1", "gamma1^2 = t_{e1}", evaluate("g1^2") == evaluate("e1"), evaluate("g1^2").str());
  r.require("gamma2^2 = t_e2", "gamma2^2 = t_{e2}", evaluate("g2^2") == evaluate("e2"), evaluate("g2^2").str());
  r.require("(gamma1 gamma2)^2 = id", "(gamma1 gamma2)^2 = 1", evaluate("(g1 g2)^2").is_identity(),
            evaluate("(g1 g2)^2").str());
  r.expect("linear parts of gamma1, gamma2", "1 -> Z^4 -> Gamma -> (Z/2)^2 -> 1",
           Json::array({group::linear_part_map(group::gamma1()), group::linear_part_map(group::gamma2())}),
           Json::array({{1, 0}, {0, 1}}));
  const auto h = group::h1_isomorphism_check();
  r.require("psi: H1(Gamma) -> Z/4 + (Z/2)^3 is an isomorphism", "psi(gamma1) = (1,0,0,0)", h.isomorphism,
            Json{{"well_defined", h.well_defined}, {"surjective", h.surjective}, {"order", h.source_order.str()}});
  r.expect("[Gamma : Gamma_1]", "Gamma_1 has index 2", group::index_in_gamma(group::gamma1_presentation()), 2);
  r.expect("[Gamma : Gamma_2]", "Gamma_2 has index 2", group::index_in_gamma(group::gamma2_presentation()), 2);
}

// ---- double cover checks ----

inline Json solution_classes_json(const std::vector<dc::SolutionClass>& cs) {
  Json j = Json::array();
  for (const auto& c : cs)
    j.push_back(Json{{"t", c.t.str()}, {"all_xi_one", c.all_xi_one}, {"L2", c.l2.str()}, {"members", c.members}});
  return j;
}

inline void add_horikawa_checks(Report& r, const Integer& k2, const Integer& chi, int bound) {
  const std::string ref = "t = -2 sum(xi_i - 1), so xi_i = 1 and t = 0";
  guarded(r, "horikawa_solve", ref, [&] {
    const auto sols = dc::horikawa_solve(k2, chi, bound);
    bool consistent = true;
    for (const auto& s : sols) {
      std::vector<Integer> m;
      for (const auto& x : s.xi) m.push_back(2 * x);
      consistent = consistent && dc::horikawa_check({k2, chi, m, s.t}, s.l2).consistent;
    }
    r.require("every Horikawa solution satisfies both formulas", "K_S*^2 = K^2 - t, chi(S*) = chi(S^)", consistent,
              sols.size());
    const auto classes = dc::solution_classes(sols);
    r.expect("Horikawa solution classes (K^2=" + k2.str() + ", chi=" + chi.str() + ", bound " +
                 std::to_string(bound) + ")",
             ref, solution_classes_json(classes),
             Json::array({Json{{"t", "0"}, {"all_xi_one", true}, {"L2", Integer(2 * chi).str()}, {"members", bound + 1}}}));
  });
}

inline void add_cover_checks(Report& r, Fault fault) {
  const auto hat = dc::cover_invariants({2, 2});
  r.expect("(K^2, chi) of X^ for L of type (2,2)", "K_X^^2 = 2 * 8 = 16, chi(X^) = 4",
           Json::array({hat.k2.str(), hat.chi.str()}), Json::array({"16", "4"}));
  const auto q = dc::quotient_invariants(hat.k2, hat.chi, 4);
  r.expect("(K^2, chi) of S = X^/G", "K_S^2 = 16/4 = 4, chi(S) = 1", Json::array({q.k2.str(), q.chi.str()}),
           Json::array({"4", "1"}));
  r.require("type (2,2) is translation invariant", "L of type (2,2)", dc::branch_type_admissible({2, 2}));
  r.require("type (1,4) is rejected", "(1,4) cannot be G-invariant", !dc::branch_type_admissible({1, 4}));
  add_horikawa_checks(r, 16, fault == Fault::chi_hat ? Integer(3) : Integer(4), 10);
}

inline void add_ledger_checks(Report& r) {
  r.expect("q (invariant 1-forms)", "H0(Omega^1)^G = 0", equiv::irregularity_ledger(), 0);
  const auto inv = kn::surface_invariant_ledger(Rational(2), Rational(3));
  r.expect("(K^2, chi, p_g, q) of S", "K_S^2 = 4, p_g = q = 0",
           Json::array({inv.k2.str(), inv.chi.str(), inv.pg, inv.q}), Json::array({"4", "1", 0, 0}));
  r.require("chi = 1 - q + p_g and K^2 = 4 chi", "Noether bookkeeping",
            inv.noether_consistent && inv.severi_equality);
  const kn::KeumNaieData d(Rational(2), Rational(3));
  r.expect("moduli dimension", "2 + (5 - 1) = 6", kn::moduli_dimension_ledger(d).dimension, 6);
  const auto e = kn::ext1_bound_ledger(Rational(2), Rational(3));
  r.expect("Ext^1 bound components", "dim Ext^1(Omega_X, O_X) <= 4 + 2 - 0",
           Json::array({e.h0_od_d, e.h0_od_l, e.ext1_pullback}), Json::array({4, 2, 0}));
  r.expect("Ext^1 bound", "dim Ext^1(Omega_X, O_X) <= 6", e.bound, 6);
  const auto n = kn::node_check();
  r.require("four nodes on Q1 and Q2, distinct", "Sigma has 4 nodes", n.passed(), n.nodes.size());
  r.expect("bicanonical degree", "bicanonical map has degree 4", kn::bicanonical_degree_ledger().degree, 4);
}

inline void add_snf_property_checks(Report& r) {
  // Divisibility chain and invariance under row/column shuffles and signs.
  const IntegerMatrix m = IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const auto s = smith_normal_form(m);
  bool chain = true;
  for (std::size_t i = 1; i < s.factors.size(); ++i) chain = chain && s.factors[i] % s.factors[i - 1] == 0;
  const IntegerMatrix shuffled = IntegerMatrix::from_rows({{-10, 16, 4}, {2, 4, 4}, {-6, 12, 6}}, 3);
  r.expect("SNF divisibility chain", "d_1 | d_2 | d_3", Json{{"chain", chain}, {"factors", integers_json(s.factors)}},
           Json{{"chain", true}, {"factors", {"2", "6", "12"}}});
  r.require("SNF shuffle invariance", "invariant factors are invariants",
            smith_normal_form(shuffled).factors == s.factors);
}

// ---- reports per subcommand ----

inline Report verify_core(Fault fault, double precision) {
  Report r(Json{{"suite", "core"},
                {"lambdas", suite_lambda_strings()},
                {"precision", precision},
                {"fault", fault == Fault::none ? Json(nullptr) : Json(fault_name(fault))}});
  for (const auto& l : suite_lambda_strings()) add_curve_checks(r, l);
  for (const auto& [a, b] : suite_pairs()) add_surface_checks(r, a, b, fault, precision);
  for (const std::string s : {"gamma", "gamma1", "gamma2"}) add_group_checks(r, s, fault);
  add_gamma_structure_checks(r);
  add_cover_checks(r, fault);
  add_ledger_checks(r);
  add_snf_property_checks(r);
  return r;
}

struct ConstructConfig {
  std::string lambda1;
  std::string lambda2;
  std::optional<std::string> coeffs;
  std::optional<std::uint64_t> seed;
  double precision = kn::kDefaultPrecision;
};

inline Report construct(const ConstructConfig& cfg) {
  const Rational l1 = parse_lambda(cfg.lambda1), l2 = parse_lambda(cfg.lambda2);
  std::array<Rational, 5> c;
  if (cfg.coeffs) {
    c = parse_coeffs(*cfg.coeffs);
  } else if (cfg.seed) {
    c = kn::random_coefficients(*cfg.seed);
  } else {
    throw UsageError("construct needs --coeffs or --seed");
  }
  const kn::KNParams params{l1, l2, c, cfg.precision};
  params.validate();
  Json cj = Json::array();
  for (const auto& x : c) cj.push_back(x.str());
  Report r(Json{{"lambda1", l1.str()},
                {"lambda2", l2.str()},
                {"coeffs", cj},
                {"seed", cfg.seed ? Json(*cfg.seed) : Json(nullptr)},
                {"precision", cfg.precision}});

  const kn::KeumNaieData d(l1, l2);
  const auto b = kn::invariant_branch_basis(d);
  r.expect("invariant (4,4) sections", "H0(L)^G has dimension 5", b.invariant_dim, 5);
  const auto f = kn::branch_section(b, c);
  r.require("branch section is G-invariant", "g* f = f", d.is_invariant(f));

  const auto fa = kn::free_action_check(d, f, cfg.precision);
  Json fav{{"margin", fa.margin}};
  if (!fa.passed) fav["point"] = Json{{"E1", point_json(fa.worst_point.p1)}, {"E2", point_json(fa.worst_point.p2)}};
  r.add({"free action (relative margin at the 16 fixed points)", "{f = 0} misses Fix(g1 g2)", fa.passed, fav,
         Json{{">", cfg.precision}}, cfg.precision});

  const auto bp = kn::base_point_check(d);
  r.require("invariant system is base point free", "|L|^{++} has no base points", bp.free());

  const auto scan = kn::singularity_scan(d, f);
  Json hits = Json::array();
  for (const auto& h : scan.hits) hits.push_back(Json{{"E1", point_json(h.p1)}, {"E2", point_json(h.p2)}});
  r.require("heuristic singularity scan", "generic f has smooth zero divisor", scan.clean(),
            Json{{"starts", scan.starts}, {"converged", scan.converged}, {"hits", hits}});

  const auto inv = kn::surface_invariant_ledger(l1, l2);
  r.expect("(K^2, chi, p_g, q)", "K_S^2 = 4, p_g = q = 0", Json::array({inv.k2.str(), inv.chi.str(), inv.pg, inv.q}),
           Json::array({"4", "1", 0, 0}));
  return r;
}

inline Report group_report(const std::string& subject, Fault fault) {
  const auto p = presentation_for(subject, fault);
  Report r(Json{{"subject", subject}, {"generators", p.generators}, {"relators", p.relators}});
  add_group_checks(r, subject, fault);
  if (subject == "gamma") add_gamma_structure_checks(r);
  return r;
}

inline Report horikawa_report(const Integer& k2, const Integer& chi, int bound) {
  Report r(Json{{"k2_hat", k2.str()}, {"chi_hat", chi.str()}, {"bound", bound}});
  add_horikawa_checks(r, k2, chi, bound);
  return r;
}

inline Report bicanonical_report(const std::string& l1s, const std::string& l2s, Fault fault, double precision) {
  const Rational l1 = parse_lambda(l1s), l2 = parse_lambda(l2s);
  Report r(Json{{"lambda1", l1.str()}, {"lambda2", l2.str()}, {"precision", precision}});
  const kn::KeumNaieData d(l1, l2);
  auto z = kn::bicanonical_basis(d);
  if (fault == Fault::z4_scale) z.z[4] = Rational(2) * z.z[4];
  Json zs = Json::array();
  for (const auto& s : z.z) zs.push_back(s.str());
  r.params()["z"] = zs;
  r.expect("psi1^2 in {1, u1}", "psi^2 = u - (1 + lambda)", Json::array({z.v1.constant.str(), z.v1.slope.str()}),
           Json::array({(-(Rational(1) + l1)).str(), "1"}));
  r.expect("psi2^2 in {1, u2}", "psi^2 = u - (1 + lambda)", Json::array({z.v2.constant.str(), z.v2.slope.str()}),
           Json::array({(-(Rational(1) + l2)).str(), "1"}));
  const auto id = kn::check_identities(z);
  r.require("z0 z3 - z1 z2", "Q1 = {z0 z3 - z1 z2 = 0}", id.q1_exact_zero, id.q1_exact_zero ? "exact zero" : "nonzero");
  r.require("z4^2 - z0 z3", "Q2 = {z4^2 - z0 z3 = 0}", id.q2_exact_zero, id.q2_exact_zero ? "exact zero" : "nonzero");
  const auto pb = kn::pullback_consistency_check(z, 100, 1e-9);
  r.bound("quadric residual at 100 random points", "z factors through E1 x E2", pb.max_residual, 1e-9);
  const auto n = kn::node_check();
  Json nodes = Json::array();
  for (const auto& p : n.nodes) {
    Json q = Json::array();
    for (const auto& x : p) q.push_back(x.str());
    nodes.push_back(q);
  }
  r.require("nodes on Q1 and Q2, distinct", "z4 = z1 = z2 = z3 = 0 and the other three", n.passed(), nodes);
  const auto deg = kn::bicanonical_degree_ledger();
  r.expect("bicanonical degree", "2 * 16 / (4 * 2) = 4",
           Json{{"cover", deg.cover_degree},
                {"product", deg.product_degree},
                {"group", deg.group_order},
                {"sigma", deg.sigma_degree},
                {"degree", deg.degree}},
           Json{{"cover", 2}, {"product", 16}, {"group", 4}, {"sigma", 2}, {"degree", 4}});
  (void)precision;
  return r;
}

// ---- entry point ----

inline int emit(const Report& r, const std::string& format, const std::string& output, std::ostream& out,
                std::ostream& err) {
  std::ofstream file;
  std::ostream* dst = &out;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return 2;
    }
    dst = &file;
  }
  if (format == "json") {
    *dst << r.to_json().dump(2) << "\n";
  } else {
    r.write_text(*dst);
  }
  if (const Check* c = r.first_failure()) {
    err << "first failing check: " << c->name << " = " << c->value.dump() << "\n";
    return 1;
  }
  return 0;
}

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::optional<std::string>& env_precision = std::nullopt) {
  CLI::App app{"Exact verification laboratory for Keum-Naie surfaces", "kn-lab"};
  app.require_subcommand(1);
  std::string format = "text", output, precision_flag, fault_text;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", output, "Write the report to this file");
    sub->add_option("--precision", precision_flag, "Numeric precision (overrides KN_PRECISION)");
    sub->add_option("--inject-fault", fault_text)->group("");
  };

  auto* core = app.add_subcommand("verify-core", "Run every core check");
  common(core);

  ConstructConfig ccfg;
  std::string coeffs;
  std::uint64_t seed = 0;
  auto* cons = app.add_subcommand("construct", "Assemble and check one surface");
  common(cons);
  cons->add_option("--lambda1", ccfg.lambda1, "First Legendre parameter p/q")->required();
  cons->add_option("--lambda2", ccfg.lambda2, "Second Legendre parameter p/q")->required();
  auto* coeff_opt = cons->add_option("--coeffs", coeffs, "Branch coefficients c0,...,c4");
  auto* seed_opt = cons->add_option("--seed", seed, "Seed for random coefficients");
  coeff_opt->excludes(seed_opt);

  std::string subject = "gamma";
  auto* grp = app.add_subcommand("group", "Presentations and abelianizations");
  common(grp);
  grp->add_option("--subject", subject, "Group")->check(CLI::IsMember({"gamma", "gamma1", "gamma2"}));

  std::string k2 = "16", chi = "4";
  int bound = 10;
  auto* hor = app.add_subcommand("horikawa", "Canonical resolution arithmetic");
  common(hor);
  hor->add_option("--k2", k2, "K^2 of the smooth cover");
  hor->add_option("--chi", chi, "chi of the smooth cover");
  hor->add_option("--bound", bound, "Enumeration bound")->check(CLI::NonNegativeNumber);

  std::string bl1, bl2;
  auto* bic = app.add_subcommand("bicanonical", "Bicanonical basis and quadrics");
  common(bic);
  bic->add_option("--lambda1", bl1, "First Legendre parameter p/q")->required();
  bic->add_option("--lambda2", bl2, "Second Legendre parameter p/q")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const double precision = resolve_precision(precision_flag, env_precision);
    Fault fault = Fault::none;
    try {
      fault = parse_fault(fault_text);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    Report r;
    if (*core) {
      r = verify_core(fault, precision);
    } else if (*cons) {
      if (!coeffs.empty() || coeff_opt->count() > 0) ccfg.coeffs = coeffs;
      if (seed_opt->count() > 0) ccfg.seed = seed;
      ccfg.precision = precision;
      r = construct(ccfg);
    } else if (*grp) {
      r = group_report(subject, fault);
    } else if (*hor) {
      auto parse_int = [](const std::string& s) {
        const Rational v = Rational::parse(s);
        if (!v.is_integer()) throw UsageError("'" + s + "' is not an integer");
        return v.numerator();
      };
      Integer chi_v;
      try {
        chi_v = parse_int(chi);
        r = horikawa_report(parse_int(k2), fault == Fault::chi_hat ? chi_v - 1 : chi_v, bound);
      } catch (const UsageError&) {
        throw;
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    } else if (*bic) {
      r = bicanonical_report(bl1, bl2, fault, precision);
    }
    return emit(r, format, output, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace knlab::cli
