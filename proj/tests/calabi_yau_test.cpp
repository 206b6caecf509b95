#include <gtest/gtest.h>

#include "quatcy/checks.hpp"
#include "quatcy/instance.hpp"
#include "quatcy/invariants.hpp"
#include "quatcy/points.hpp"
#include "support.hpp"

namespace quatcy {
namespace {

FieldPtr f13() { return make_field(FieldSpec::prime(13)); }
Poly var(const FieldPtr& k, Var v) { return Poly::variable(k, v); }

Instance with_zeros(Instance inst, std::initializer_list<std::pair<Character, std::size_t>> zeros) {
  for (auto [chi, n] : zeros) inst.set_param(chi, n, inst.field->zero());
  return inst;
}

// Seed whose t1_5 = 0 variant has its L- witness already over F_13.
constexpr std::uint64_t kDegenerateSeed = 5;

Instance symplectic_control() {
  return with_zeros(random_instance(kDegenerateSeed, FieldSpec::prime(13)), {{Character::trivial, 5}});
}

Instance origin_control() {
  return with_zeros(random_instance(1, FieldSpec::prime(13)),
                    {{Character::trivial, 1}, {Character::alpha, 1}, {Character::beta, 1}, {Character::gamma, 1}});
}

TEST(Instance, BetaQuadricWithUnitCoefficients) {
  const auto k = f13();
  const QuadricSystem qs = build_quadrics(uniform_instance(k, 1));
  auto v = [&](Var x) { return var(k, x); };
  const Poly expected = v(Var::X1) * v(Var::Xb) + v(Var::Xa) * v(Var::Xg) + v(Var::Y) * v(Var::Y) +
                        v(Var::Z) * v(Var::Z) + v(Var::Yp) * v(Var::Yp) + v(Var::Zp) * v(Var::Zp) +
                        v(Var::Y) * v(Var::Yp) + v(Var::Z) * v(Var::Zp);
  EXPECT_EQ(qs[Character::beta], expected);
}

TEST(Instance, FormulasTermByTerm) {
  const Instance inst = random_instance(9, FieldSpec::prime(13));
  const auto& k = inst.field;
  auto v = [&](Var x) { return var(k, x); };
  auto t = [&](Character chi, std::size_t n) { return Poly::constant(k, inst.param(chi, n)); };
  using C = Character;
  const QuadricSystem qs = build_quadrics(inst);
  EXPECT_EQ(qs[C::trivial], t(C::trivial, 1) * v(Var::X1) * v(Var::X1) + t(C::trivial, 2) * v(Var::Xa) * v(Var::Xa) +
                                t(C::trivial, 3) * v(Var::Xb) * v(Var::Xb) + t(C::trivial, 4) * v(Var::Xg) * v(Var::Xg) +
                                t(C::trivial, 5) * (v(Var::Y) * v(Var::Zp) - v(Var::Yp) * v(Var::Z)));
  EXPECT_EQ(qs[C::alpha], t(C::alpha, 1) * v(Var::X1) * v(Var::Xa) + t(C::alpha, 2) * v(Var::Xb) * v(Var::Xg) +
                              t(C::alpha, 3) * v(Var::Y) * v(Var::Z) + t(C::alpha, 4) * v(Var::Yp) * v(Var::Zp) +
                              t(C::alpha, 5) * (v(Var::Y) * v(Var::Zp) + v(Var::Z) * v(Var::Yp)));
  EXPECT_EQ(qs[C::gamma], t(C::gamma, 1) * v(Var::X1) * v(Var::Xg) + t(C::gamma, 2) * v(Var::Xa) * v(Var::Xb) +
                              t(C::gamma, 3) * (v(Var::Y) * v(Var::Y) - v(Var::Z) * v(Var::Z)) +
                              t(C::gamma, 4) * (v(Var::Yp) * v(Var::Yp) - v(Var::Zp) * v(Var::Zp)) +
                              t(C::gamma, 5) * (v(Var::Y) * v(Var::Yp) - v(Var::Z) * v(Var::Zp)));
}

TEST(Instance, QuadricsLieInDistinctIsotypicComponents) {
  // Hence they are linearly independent.
  const QuadricSystem qs = build_quadrics(random_instance(2, FieldSpec::prime(13)));
  for (Character chi : kCharacters)
    for (Character psi : kCharacters) {
      const Poly p = isotypic_project(qs[chi], psi);
      if (chi == psi) {
        EXPECT_EQ(p, qs[chi]);
      } else {
        EXPECT_TRUE(p.is_zero());
      }
    }
}

TEST(Instance, RequiresSquareRootOfMinusOne) {
  EXPECT_THROW(build_quadrics(uniform_instance(make_field(FieldSpec::prime(7)), 1)), NoSquareRootOfMinusOne);
}

TEST(Instance, RandomIsDeterministicAndNonzero) {
  const Instance a = random_instance(1, FieldSpec::prime(13)), b = random_instance(1, FieldSpec::prime(13));
  const Instance c = random_instance(2, FieldSpec::prime(13));
  EXPECT_EQ(build_quadrics(a)[Character::trivial], build_quadrics(b)[Character::trivial]);
  bool differ = false;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t n = 0; n < 5; ++n) differ = differ || !a.field->equal(a.t[r][n], c.t[r][n]);
  EXPECT_TRUE(differ);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) EXPECT_FALSE(random_instance(seed, FieldSpec::prime(13)).is_degenerate());
  const Instance qi = random_instance(3, FieldSpec::gaussian_rational());
  EXPECT_FALSE(qi.is_degenerate());
}

TEST(Instance, DegenerateFlag) {
  const Instance inst = symplectic_control();
  EXPECT_TRUE(inst.is_degenerate());
  const QuadricSystem qs = build_quadrics(inst);
  const Poly symplectic = var(inst.field, Var::Y) * var(inst.field, Var::Zp);
  EXPECT_TRUE(inst.field->is_zero(qs[Character::trivial].coefficient(symplectic.leading_monomial())));
}

TEST(Eigenspace, BuiltInstancesAreCertified) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const CheckRecord r = check_eigenspace(random_instance(seed, FieldSpec::prime(13)));
    EXPECT_EQ(r.verdict, Verdict::certified);
    EXPECT_EQ(r.witnesses["identities"], 32);
  }
  EXPECT_EQ(check_eigenspace(random_instance(1, FieldSpec::gaussian_rational())).verdict, Verdict::certified);
}

TEST(Eigenspace, CorruptedQuadricIsRefuted) {
  QuadricSystem qs = build_quadrics(random_instance(1, FieldSpec::prime(13)));
  const auto& k = qs.field();
  qs.q[0] += var(k, Var::X1) * var(k, Var::Xa);
  // h = i fixes X1*Xa (alpha(i) = 1); the first element exposing the
  // corruption is j.
  EXPECT_EQ(act_on_poly(GroupElement::i, var(k, Var::X1) * var(k, Var::Xa)), var(k, Var::X1) * var(k, Var::Xa));
  EXPECT_EQ(eigen_law_violation(qs.q[0], Character::trivial), GroupElement::j);
  const CheckRecord r = check_eigenspace(qs);
  EXPECT_EQ(r.verdict, Verdict::refuted);
  ASSERT_FALSE(r.witnesses["violations"].empty());
  EXPECT_EQ(r.witnesses["violations"][0]["h"], "j");
  EXPECT_EQ(r.witnesses["violations"][0]["chi"], "1");
  EXPECT_EQ(r.witnesses["violations"].size(), 4u);  // j, -j, k, -k
}

TEST(Eigenspace, SymplecticFormIsInvariant) {
  const auto k = f13();
  const Poly w = var(k, Var::Y) * var(k, Var::Zp) - var(k, Var::Yp) * var(k, Var::Z);
  EXPECT_FALSE(eigen_law_violation(w, Character::trivial).has_value());
}

TEST(FreeAction, GenericInstanceIsCertified) {
  const CheckRecord g = check_free_action(random_instance(1, FieldSpec::prime(13)));
  EXPECT_EQ(g.verdict, Verdict::certified);
  EXPECT_TRUE(g.witnesses.contains("L+"));
  EXPECT_TRUE(g.witnesses.contains("L-"));
  for (const char* locus : {"L+", "L-"})
    for (const auto& [var, n] : g.witnesses[locus].items()) EXPECT_GE(n.get<int>(), 1) << locus << " " << var;
}

TEST(FreeAction, SymplecticControlIsRefutedInLMinus) {
  const Instance inst = symplectic_control();
  const QuadricSystem qs = build_quadrics(inst);
  // Q1 vanishes identically on L- once t1_5 = 0.
  EXPECT_TRUE(substitute_zero(qs[Character::trivial], var_set({Var::X1, Var::Xa, Var::Xb, Var::Xg})).is_zero());
  for (Method m : {Method::groebner, Method::enumeration, Method::both}) {
    CheckOptions o;
    o.method = m;
    const CheckRecord r = check_free_action(inst, o);
    EXPECT_EQ(r.verdict, Verdict::refuted) << to_string(m);
  }
  const CheckRecord r = check_free_action(inst);
  const auto& w = r.witnesses["fixed_point"];
  EXPECT_EQ(w["locus"], "L-");
  const auto field = make_field(FieldSpec::prime(13));
  Point x;
  for (std::size_t v = 0; v < kNumVars; ++v) x[v] = field->parse(w["point"][v].get<std::string>());
  for (std::size_t v = 0; v < 4; ++v) EXPECT_TRUE(field->is_zero(x[v]));
  EXPECT_TRUE(is_fixed_point(qs, field, x, GroupElement::minus_one));
}

TEST(FreeAction, WitnessOverAnExtensionIsReverified) {
  // Seed 1's symplectic control meets L- only over F_169.
  const Instance inst = with_zeros(random_instance(1, FieldSpec::prime(13)), {{Character::trivial, 5}});
  const CheckRecord r = check_free_action(inst);
  ASSERT_EQ(r.verdict, Verdict::refuted);
  const auto& w = r.witnesses["fixed_point"];
  EXPECT_EQ(w["field"], "F_13^2");
  const auto ext = make_field(FieldSpec::extension(13, 2));
  Point x;
  for (std::size_t v = 0; v < kNumVars; ++v) x[v] = ext->parse(w["point"][v].get<std::string>());
  EXPECT_TRUE(is_fixed_point(build_quadrics(inst), ext, x, GroupElement::minus_one));
}

TEST(FreeAction, RankLossControlIsRefuted) {
  using C = Character;
  const Instance inst = with_zeros(random_instance(1, FieldSpec::prime(13)),
                                   {{C::alpha, 3}, {C::alpha, 4}, {C::alpha, 5}, {C::beta, 3}, {C::beta, 4}, {C::beta, 5}});
  for (Method m : {Method::groebner, Method::enumeration}) {
    CheckOptions o;
    o.method = m;
    EXPECT_EQ(check_free_action(inst, o).verdict, Verdict::refuted) << to_string(m);
  }
}

TEST(FreeAction, TinyBudgetIsInconclusive) {
  CheckOptions o;
  o.budget = {1, 5000000};
  const CheckRecord r = check_free_action(random_instance(1, FieldSpec::prime(13)), o);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_NE(r.note.find("budget"), std::string::npos);
}

TEST(Smoothness, GenericInstanceIsCertified) {
  const CheckRecord r = check_smooth(random_instance(1, FieldSpec::prime(13)));
  EXPECT_EQ(r.verdict, Verdict::certified);
  for (const auto& [var, n] : r.witnesses["singular_locus"].items()) EXPECT_GE(n.get<int>(), 1) << var;
}

TEST(Smoothness, OriginControlIsRefuted) {
  const Instance inst = origin_control();
  for (Method m : {Method::groebner, Method::enumeration, Method::both}) {
    CheckOptions o;
    o.method = m;
    const CheckRecord r = check_smooth(inst, o);
    EXPECT_EQ(r.verdict, Verdict::refuted) << to_string(m);
  }
  const CheckRecord r = check_smooth(inst);
  EXPECT_EQ(r.witnesses["singular_point"]["point"], (nlohmann::json{"1", "0", "0", "0", "0", "0", "0", "0"}));
  EXPECT_EQ(check_free_action(inst).verdict, Verdict::refuted);
}

TEST(Smoothness, JacobianBlockForm) {
  const Instance inst = random_instance(6, FieldSpec::prime(13));
  const auto& k = inst.field;
  const auto jac = jacobian(build_quadrics(inst));
  auto v = [&](Var x) { return var(k, x); };
  auto t = [&](Character chi, std::size_t n) { return Poly::constant(k, inst.param(chi, n)); };
  const Poly two = Poly::constant(k, 2), zero(k);
  using C = Character;
  const std::vector<std::vector<Poly>> expected = {
      {two * t(C::trivial, 1) * v(Var::X1), two * t(C::trivial, 2) * v(Var::Xa), zero, zero},
      {t(C::alpha, 1) * v(Var::Xa), t(C::alpha, 1) * v(Var::X1), zero, zero},
      {zero, zero, t(C::beta, 1) * v(Var::X1), t(C::beta, 2) * v(Var::Xa)},
      {zero, zero, t(C::gamma, 2) * v(Var::Xa), t(C::gamma, 1) * v(Var::X1)}};
  const VarSet xb_xg = var_set({Var::Xb, Var::Xg});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(substitute_zero(jac[r][c], xb_xg), expected[r][c]) << r << "," << c;
  // Away from X1 Xa (t1_1 t^a_1 X1^2 - t1_2 t^a_1 Xa^2)... the block
  // determinant is the product of the two 2x2 determinants.
  std::vector<std::vector<Poly>> block(4, std::vector<Poly>(4, zero));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) block[r][c] = expected[r][c];
  EXPECT_EQ(determinant(block), determinant({{expected[0][0], expected[0][1]}, {expected[1][0], expected[1][1]}}) *
                                    determinant({{expected[2][2], expected[2][3]}, {expected[3][2], expected[3][3]}}));
}

TEST(CompleteIntersection, HilbertFunctionThroughDegreeEight) {
  const CheckRecord r = check_complete_intersection(random_instance(1, FieldSpec::prime(13)));
  EXPECT_EQ(r.verdict, Verdict::certified);
  EXPECT_EQ(r.witnesses["hilbert_function"],
            (nlohmann::json{1, 8, 32, 88, 192, 360, 608, 952, 1408}));
  EXPECT_EQ(complete_intersection_hilbert(3), (std::vector<std::uint64_t>{1, 8, 32, 88}));
}

TEST(ReidSurface, StableAndSmooth) {
  const auto records = reid_surface(random_instance(1, FieldSpec::prime(13)));
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].name, "reid_surface_stability");
  EXPECT_EQ(records[0].verdict, Verdict::certified);
  EXPECT_EQ(records[0].witnesses["identities"], 32);
  EXPECT_EQ(records[1].name, "reid_surface_smoothness");
  EXPECT_EQ(records[1].verdict, Verdict::certified);
  EXPECT_EQ(chern_invariants().k2_surface, 2);
}

TEST(ReidSurface, SectionGenerators) {
  const QuadricSystem qs = build_quadrics(random_instance(1, FieldSpec::prime(13)));
  const auto gens = surface_singular_locus_ideal(qs);
  EXPECT_EQ(gens.size(), 1u + 4u + 35u);
  EXPECT_EQ(gens[0], var(qs.field(), Var::X1));
  for (std::size_t n = 1; n < gens.size(); ++n) {
    for (const Term& t : gens[n].terms()) EXPECT_EQ(t.mono.exponent(Var::X1), 0u) << n;
  }
}

// Affine solutions of Q_chi = f_chi(X) + g_chi(W) = 0 for all chi, counted as
// sum_a #{x : f(x) = a} * #{w : g(w) = -a}; projective count (N - 1)/(q - 1).
std::uint64_t join_count(const Instance& inst) {
  const QuadricSystem qs = build_quadrics(inst);
  const Field& k = *inst.field;
  const std::uint64_t q = k.cardinality();
  const VarSet xs = var_set({Var::X1, Var::Xa, Var::Xb, Var::Xg}), ws = var_set({Var::Y, Var::Z, Var::Yp, Var::Zp});
  std::array<Poly, 4> f = qs.q, g = qs.q;
  for (std::size_t c = 0; c < 4; ++c) {
    f[c] = substitute_zero(qs.q[c], ws);
    g[c] = substitute_zero(qs.q[c], xs);
  }
  auto key = [&](const std::array<std::uint64_t, 4>& v) { return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]; };
  auto histogram = [&](const std::array<Poly, 4>& polys, std::size_t offset, bool negate) {
    std::vector<std::uint64_t> h(q * q * q * q, 0);
    Point x;
    for (auto& c : x) c = k.zero();
    for (std::uint64_t code = 0; code < q * q * q * q; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < 4; ++i, c /= q) x[offset + i] = c % q;
      std::array<std::uint64_t, 4> v;
      for (std::size_t i = 0; i < 4; ++i) {
        Element e = evaluate(polys[i], x);
        if (negate) e = k.neg(e);
        v[i] = std::get<std::uint64_t>(e);
      }
      ++h[key(v)];
    }
    return h;
  };
  const auto a = histogram(f, 0, false), b = histogram(g, 4, true);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] * b[i];
  return (n - 1) / (q - 1);
}

TEST(Points, CountMatchesStructuredJoin) {
  for (const Instance& inst : {random_instance(1, FieldSpec::prime(13)), origin_control()}) {
    const PointScan s = scan_points(inst, 1);
    EXPECT_EQ(s.points.size(), join_count(inst));
  }
}

TEST(Points, FreeInstancesHaveOnlyFullOrbits) {
  const PointScan s = scan_points(random_instance(1, FieldSpec::prime(13)), 1);
  EXPECT_GT(s.points.size(), 0u);
  EXPECT_EQ(s.points.size() % 8, 0u);
  ASSERT_EQ(s.orbit_histogram.size(), 1u);
  EXPECT_EQ(s.orbit_histogram.begin()->first, 8u);
  EXPECT_EQ(s.orbit_histogram.begin()->second, s.points.size() / 8);
  EXPECT_EQ(s.fixed_point_count, 0u);
  EXPECT_EQ(s.singular_count, 0u);
}

TEST(Points, RefutedInstanceHasASmallOrbit) {
  const PointScan s = scan_points(symplectic_control(), 1);
  EXPECT_GT(s.fixed_point_count, 0u);
  EXPECT_LT(s.orbit_histogram.begin()->first, 8u);
  EXPECT_EQ(8 % s.orbit_histogram.begin()->first, 0u);
}

TEST(Points, EnumerationCap) {
  EXPECT_THROW(scan_points(random_instance(1, FieldSpec::prime(13)), 2), EnumerationTooLarge);
  EXPECT_THROW(scan_points(random_instance(1, FieldSpec::gaussian_rational()), 1), EnumerationTooLarge);
  EXPECT_THROW(enumeration_field(random_instance(1, FieldSpec::prime(13)), 0, 17), EnumerationTooLarge);
  EXPECT_EQ(enumeration_field(random_instance(1, FieldSpec::prime(5)), 2, 25)->cardinality(), 25u);
}

TEST(Points, ExtensionFieldScanMatchesJoinCount) {
  // Instance defined over F_9 itself: exercises non-prime table arithmetic.
  const Instance inst = random_instance(3, FieldSpec::extension(3, 2));
  const PointScan s = scan_points(inst, 1, ScanOptions{9, 0});
  EXPECT_EQ(s.points.size(), join_count(inst));
  EXPECT_EQ(s.field->cardinality(), 9u);
}

TEST(Points, ThreadCountDoesNotChangeResults) {
  const QuadricSystem qs = build_quadrics(random_instance(2, FieldSpec::prime(13)));
  const SmallField k(qs.field());
  VarSet all;
  all.set();
  const std::vector<Poly> polys(qs.q.begin(), qs.q.end());
  EXPECT_EQ(projective_zeros(polys, k, all, 1), projective_zeros(polys, k, all, 3));
}

TEST(Points, ProjectiveZerosOnASubspace) {
  // Brute-force oracle over P^2 spanned by (Y, Z, Zp) for Y*Z - Zp^2.
  const auto field = make_field(FieldSpec::prime(13));
  const SmallField k(field);
  const Poly f = var(field, Var::Y) * var(field, Var::Z) - var(field, Var::Zp) * var(field, Var::Zp);
  const auto zeros = projective_zeros({f}, k, var_set({Var::Y, Var::Z, Var::Zp}));
  EXPECT_EQ(zeros.size(), 14u);  // a smooth conic has q + 1 points
  for (const auto& x : zeros) {
    EXPECT_EQ(normalize(x, k), x);
    EXPECT_TRUE(field->is_zero(evaluate(f, to_point(x, k))));
  }
}

TEST(Points, ThreadEnvironmentVariable) {
  ::setenv("QUATCY_THREADS", "3", 1);
  EXPECT_EQ(worker_threads(), 3u);
  EXPECT_EQ(worker_threads(2), 2u);
  ::unsetenv("QUATCY_THREADS");
  EXPECT_GE(worker_threads(), 1u);
}

TEST(Verifier, MethodsAgreeAcrossSeeds) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CheckOptions o;
    o.method = Method::both;
    InstanceVerifier v(random_instance(seed, FieldSpec::prime(13)), o);
    for (const CheckRecord& r : v.run({"free", "smooth"})) {
      ASSERT_EQ(r.parts.size(), 2u);
      const Verdict g = r.parts[0].verdict, e = r.parts[1].verdict;
      EXPECT_FALSE(g == Verdict::certified && e == Verdict::refuted) << seed << " " << r.name;
      EXPECT_FALSE(g == Verdict::refuted && e == Verdict::certified) << seed << " " << r.name;
    }
  }
}

TEST(Verifier, RunOrderAndUnknownChecks) {
  InstanceVerifier v(random_instance(1, FieldSpec::prime(13)));
  const auto records = v.run({"surface", "eigen"});
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].name, "eigenspace");
  EXPECT_EQ(records[1].name, "reid_surface_stability");
  EXPECT_THROW(v.run({"bogus"}), std::invalid_argument);
}

TEST(Verifier, GaussianRationalInstance) {
  // Characteristic zero: Groebner certificates still apply, enumeration does not.
  InstanceVerifier v(random_instance(2, FieldSpec::gaussian_rational()));
  EXPECT_EQ(v.free_action().verdict, Verdict::certified);
  EXPECT_EQ(v.complete_intersection().verdict, Verdict::certified);
}

TEST(Verifier, ReverificationRejectsNonPoints) {
  const QuadricSystem qs = build_quadrics(random_instance(1, FieldSpec::prime(13)));
  Point x;
  for (auto& c : x) c = qs.field()->zero();
  EXPECT_FALSE(is_fixed_point(qs, qs.field(), x, GroupElement::minus_one));
  x[0] = qs.field()->one();
  VarSet all;
  all.set();
  EXPECT_FALSE(is_singular_point(qs, qs.field(), x, all));
}

}  // namespace
}  // namespace quatcy
