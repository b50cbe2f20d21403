#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "witt/descent.hpp"
#include "witt/metabolic.hpp"
#include "witt/quad_descent.hpp"
#include "witt/search.hpp"

namespace witt {
namespace {

FieldRef Q() { return rationals(); }
FieldRef q_sqrt2() { return parse_field("Q(sqrt(2))"); }

AlgebraRef hamilton() {
  return AlgebraWithInvolution::quaternion(parse_quaternion_algebra(Q(), "(-1,-1)"), InvolutionSpec::canonical());
}

AlgebraRef hamilton_k() { return hamilton()->extend_scalars(q_sqrt2()); }

HermitianForm diag(AlgebraRef alg, std::vector<std::string> entries) {
  DVector v;
  for (const auto& e : entries) v.push_back(alg->parse(e));
  return HermitianForm::diagonal(alg, 1, v);
}

// Every coefficient of every component of q_{h o P, B_K} lies in F.
bool certificate_gives_f_structure(const HermitianForm& h, const HermitianCertificate& c) {
  const auto& alg = h.algebra();
  std::vector<DElement> bk;
  for (const auto& x : alg.base()->symd_basis(h.lambda())) bk.push_back(alg.embed(x));
  const AssociatedSystem a = associated_system(h.compose(c.basis), bk);
  for (const auto& q : a.system.components())
    if (!restrict_to_base(q)) return false;
  return true;
}

TEST(HermitianDescent, ExtendedFormsDescend) {
  Rng rng(1);
  for (int k = 0; k < 5; ++k) {
    const HermitianForm h = extend_scalars(gen::random_hermitian(hamilton(), 2, rng), q_sqrt2());
    const DescentVerdict v = hermitian_descent(h);
    EXPECT_EQ(v.decision, Decision::yes);
    EXPECT_EQ(v.route, "hermitian-transfer-hyperbolicity");
    EXPECT_EQ(v.verified, true);
    const auto cert = hermitian_descent_construct(h);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_certificate(h, *cert));
    EXPECT_TRUE(certificate_gives_f_structure(h, *cert));
  }
}

TEST(HermitianDescent, Sqrt2HasNoDescent) {
  const DescentVerdict v = hermitian_descent_decide(diag(hamilton_k(), {"1,0,0,0", "eta,0,0,0"}));
  EXPECT_EQ(v.decision, Decision::no);
  ASSERT_FALSE(v.obstruction.is_null());
  EXPECT_EQ(v.details["transfer_commutes_with_associated_system"], true);
}

TEST(HermitianDescent, SquareScaling) {
  const HermitianForm h = diag(hamilton_k(), {"1,0,0,0", "3+2*eta,0,0,0"});
  const DescentVerdict v = hermitian_descent(h);
  EXPECT_EQ(v.decision, Decision::yes);
  EXPECT_EQ(v.verified, true);
  const auto cert = hermitian_descent_construct(h);
  ASSERT_TRUE(cert.has_value());
  // <1, 1>: both values are positive rationals, and a product of norms of Hamilton
  for (const auto& a : cert->alphas) {
    const auto r = hamilton()->quaternion_algebra().as_scalar(a);
    ASSERT_TRUE(r.has_value());
    EXPECT_GT(RationalField::value(*r), 0);
  }
}

TEST(HermitianConstruct, Examples) {
  const HermitianForm one_one = extend_scalars(diag(hamilton(), {"1,0,0,0", "1,0,0,0"}), q_sqrt2());
  const auto c = hermitian_descent_construct(one_one);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify_certificate(one_one, *c));

  AlgebraRef kk = AlgebraWithInvolution::commutative(Q())->extend_scalars(q_sqrt2());
  const HermitianForm line = diag(kk, {"3+2*eta"});
  const auto l = hermitian_descent_construct(line);
  ASSERT_TRUE(l.has_value());
  ASSERT_EQ(l->alphas.size(), 1u);
  // <3+2 sqrt 2> ~ <c^2> for rational c: a square class of Q that is a square in K
  const Element alpha = l->alphas[0][0];
  EXPECT_TRUE(q_sqrt2()->sqrt(parse_element(q_sqrt2(), "3+2*eta") / extension_of(q_sqrt2()).embed(alpha)).has_value());

  HermitianDescentOptions zero;
  zero.budget = 0;
  zero.restarts = 0;
  const DescentVerdict v = hermitian_descent(one_one, zero);
  EXPECT_EQ(v.decision, Decision::yes);
  EXPECT_TRUE(v.certificate.is_null());
  EXPECT_FALSE(v.verified.has_value());
}

TEST(QuaternionicDescent, Examples) {
  Rng rng(3);
  const HermitianForm ext = extend_scalars(gen::random_hermitian(hamilton(), 2, rng), q_sqrt2());
  const DescentVerdict yes = quaternionic_descent_to_F(ext);
  EXPECT_EQ(yes.decision, Decision::yes);
  EXPECT_EQ(yes.route, "corestriction-and-trace-form-descent");

  AlgebraRef bad = AlgebraWithInvolution::quaternion(parse_quaternion_algebra(q_sqrt2(), "(-1,eta)"),
                                                    InvolutionSpec::canonical());
  const DescentVerdict cor = quaternionic_descent_to_F(diag(bad, {"1,0,0,0"}));
  EXPECT_EQ(cor.decision, Decision::no);
  EXPECT_EQ(cor.details["corestriction"]["verdict"], "no");

  AlgebraRef hk = AlgebraWithInvolution::quaternion(parse_quaternion_algebra(q_sqrt2(), "(-1,-1)"),
                                                   InvolutionSpec::canonical());
  const DescentVerdict trace = quaternionic_descent_to_F(diag(hk, {"1,0,0,0", "eta,0,0,0"}));
  EXPECT_EQ(trace.decision, Decision::no);
  EXPECT_EQ(trace.details["corestriction"]["verdict"], "yes");
}

TEST(Remark, Report) {
  const RemarkReport r = remark_counterexample_check();
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.norm_is_square);
  FieldRef f = parse_field("GF(2)(t)");
  EXPECT_EQ(r.norm, parse_element(f, "1+t+t^4").str());
  EXPECT_EQ(r.q_w, parse_element(parse_field("GF(2)(t)(artin-schreier(t))"), "1+t^3").str());
  EXPECT_TRUE(r.q_descends);
  EXPECT_EQ(r.h_has_no_descent, Decision::yes);
  EXPECT_TRUE(r.excluded_case_rejected);
  EXPECT_EQ(r.to_json()["verdict"], "q descends, h does not");
}

TEST(Erratum, Report) {
  const ErratumReport r = erratum_counterexample_check();
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.to_json()["verdict"], "componentwise: yes,yes; system: no");
}

TEST(BilinearObstruction, Examples) {
  FieldRef k = parse_field("GF(2)(t)(artin-schreier(t))");
  const SymmetricBilinearForm b =
      SymmetricBilinearForm::diagonal(k, {k->one(), parse_element(k, "1+t^2+t*eta")});
  EXPECT_EQ(bilinear_determinant_obstruction(b), Decision::yes);
  const SymmetricBilinearForm c = SymmetricBilinearForm::diagonal(k, {k->one(), parse_element(k, "t")});
  EXPECT_EQ(bilinear_determinant_obstruction(c), Decision::no);
}

TEST(Stability, NoVerdictsIgnoreSeedAndScale) {
  const HermitianForm h = diag(hamilton_k(), {"1,0,0,0", "eta,0,0,0"});
  for (std::uint64_t seed : {1u, 2u, 99u})
    for (long c : {1L, -3L, 5L}) {
      HermitianDescentOptions o;
      o.seed = seed;
      o.functional_scale = Q()->from_int(c);
      const DescentVerdict v = hermitian_descent_decide(h, o);
      EXPECT_EQ(v.decision, Decision::no) << seed << " " << c;
    }
  FieldRef k = q_sqrt2();
  const QuadraticForm q = QuadraticForm::diagonal(k, {parse_element(k, "eta")});
  for (long c : {1L, 2L, -7L}) {
    DescentOptions o;
    o.functional_scale = Q()->from_int(c);
    EXPECT_EQ(quad_descent_decide(q, o).decision, Decision::no);
  }
}

TEST(OracleEquivalence, Gf9LinesAndPlanes) {
  FieldRef k = parse_field("GF(3)(sqrt(2))");
  AlgebraRef kk = AlgebraWithInvolution::commutative(parse_field("GF(3)"))->extend_scalars(k);
  int checked = 0;
  // all regular binary forms given by upper-triangular coefficients (a, b, c)
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b)
      for (std::uint64_t c = 0; c < 9; ++c) {
        Matrix u(k, 2, 2);
        u(0, 0) = k->element_at(a);
        u(0, 1) = k->element_at(b);
        u(1, 1) = k->element_at(c);
        u(1, 0) = k->zero();
        const QuadraticForm q(u);
        if (!is_regular(q)) continue;
        // the matching hermitian form has Gram = polar / 2
        DMatrix g(*kk, 2, 2);
        const Matrix p = q.polar_matrix();
        const Element half = k->from_int(2).inverse();
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) g(i, j) = kk->scalar(p(i, j) * half);
        const HermitianForm h(kk, 1, g);
        const bool want = oracle::gf9_has_f_structure(oracle::gf9_coefficients(q));
        EXPECT_EQ(hermitian_descent_decide(h).decision, from_bool(want)) << q.coefficients().to_strings()[0][1];
        EXPECT_EQ(quad_descent_decide(q).decision, from_bool(want));
        ++checked;
      }
  EXPECT_GT(checked, 500);
}

TEST(BasisIndependence, SameVerdictForScaledBases) {
  Rng rng(5);
  FieldRef k = parse_field("GF(5)(sqrt(2))");
  AlgebraRef base = AlgebraWithInvolution::commutative(parse_field("GF(5)"));
  AlgebraRef kk = base->extend_scalars(k);
  for (int i = 0; i < 30; ++i) {
    const HermitianForm h = gen::random_hermitian(kk, 1 + i % 2, rng);
    Decision first = Decision::undecided;
    for (long c : {1L, 2L, 3L}) {
      const QuadraticSystem sys = associated_system(h, {kk->scalar(k->from_int(c))}).system;
      const Decision d = system_is_metabolic(system_transfer(sys)).decision;
      if (c == 1) first = d;
      EXPECT_EQ(d, first);
    }
    EXPECT_EQ(first, hermitian_descent_decide(h).decision);
  }
}

TEST(SystemDescent, YesImpliesMetabolicTransfer) {
  Rng rng(7);
  FieldRef k = parse_field("GF(3)(sqrt(2))");
  for (int i = 0; i < 20; ++i) {
    const QuadraticSystem q(k, 2, {gen::random_form(k, 2, rng), gen::random_form(k, 2, rng)});
    const DescentVerdict v = system_descent_search(q);
    ASSERT_NE(v.decision, Decision::undecided);
    if (v.decision == Decision::yes) EXPECT_EQ(system_is_metabolic(system_transfer(q)).decision, Decision::yes);
  }
}

TEST(Errors, ExcludedAndIrregularInputs) {
  AlgebraRef f = AlgebraWithInvolution::commutative(Q())->extend_scalars(q_sqrt2());
  DMatrix g(*f, 2, 2);
  g(0, 0) = g(1, 1) = f->zero();
  g(0, 1) = f->one();
  g(1, 0) = f->neg(f->one());
  EXPECT_ANY_THROW(hermitian_descent_decide(HermitianForm(f, -1, g)));
  EXPECT_ANY_THROW(hermitian_descent_decide(diag(hamilton_k(), {"1,0,0,0", "0,0,0,0"})));
}

}  // namespace
}  // namespace witt
