#include "generators.hpp"
#include "nccalc/reporacle.hpp"
#include "nccalc/skew.hpp"

#include <gtest/gtest.h>

using namespace nccalc;

namespace {

const AElem X = AElem::gen(Gen::x), Y = AElem::gen(Gen::y), Z = AElem::gen(Gen::z);
const RatFun R = rho(), HB = hbar();

TEST(AFromU, Examples) {
  const UPoly x = UPoly::gen(Gen::x), y = UPoly::gen(Gen::y), z = UPoly::gen(Gen::z);
  const AElem cas = a_from_u(x * x + y * y + z * z);
  EXPECT_TRUE(cas.is_central());
  EXPECT_EQ(cas.central_part(), R * R - HB * HB);
  EXPECT_EQ(a_from_u(z), Z);
  const AElem z3 = a_from_u(z * z * z);
  EXPECT_EQ(z3, (R * R - HB * HB) * Z - X * X * Z - Y * Y * Z);
}

TEST(AFromU, ZCubedAgreesWithOracle) {
  const AElem z3 = a_from_u(UPoly::gen(Gen::z) * UPoly::gen(Gen::z) * UPoly::gen(Gen::z));
  for (const Rep& r : default_reps()) EXPECT_LT(relative_error(rep_eval(z3, r), r.z * r.z * r.z), 1e-12);
}

TEST(AFromU, TMovesToCoefficients) {
  const AElem a = a_from_u(UPoly::gen(Gen::t) * UPoly::gen(Gen::x));
  EXPECT_EQ(a, t_sym() * X);
  EXPECT_EQ(AElem::gen(Gen::t), AElem(t_sym()));
}

TEST(AMul, Examples) {
  EXPECT_EQ(Z * Z, AElem(R * R - HB * HB) - X * X - Y * Y);
  EXPECT_TRUE((AElem(R) * X - X * AElem(R)).is_zero());
  EXPECT_EQ((Z * Y) * Y, Z * (Y * Y));
  EXPECT_EQ(a_mul(X, Y), X * Y);
}

TEST(AElem, CanonicalFormHasZDegreeAtMostOne) {
  testgen::Source s(3);
  for (int k = 0; k < 10; ++k) {
    const AElem a = s.element(4);
    for (const auto& [m, c] : a.terms()) EXPECT_LE(m.e[2], 1);
  }
}

TEST(ClassicalLimit, Examples) {
  EXPECT_TRUE(a_classical_limit(X * Y - Y * X).is_zero());
  EXPECT_EQ(a_classical_limit(AElem(R * R - HB * HB)), ClassPoly(R * R));
}

TEST(ClassicalLimit, IsMultiplicative) {
  testgen::Source s(9);
  for (int k = 0; k < 10; ++k) {
    const AElem a = s.element(2), b = s.element(2);
    EXPECT_EQ(a_classical_limit(a * b), (a_classical_limit(a) * a_classical_limit(b)).reduce_radius());
  }
}

TEST(Skew, CentralInverseFolds) {
  const SkewExpr e = SkewExpr::inverse(SkewExpr(AElem(R)));
  ASSERT_TRUE(e.is_atom());
  EXPECT_EQ(e.as_atom(), AElem(R.inverse()));
}

TEST(Skew, InverseTimesElementIsIdentity) {
  const SkewExpr e = SkewExpr(X) * SkewExpr::inverse(SkewExpr(X));
  int checked = 0;
  for (const Rep& r : default_reps()) {
    CMat m;
    try {
      m = rep_eval(e, r);
    } catch (const SingularInverse&) {
      continue;
    }
    ++checked;
    EXPECT_LT(relative_error(m, CMat::Identity(r.dim(), r.dim())), 1e-10);
  }
  EXPECT_GT(checked, 0);
}

TEST(Skew, ZeroInverseThrows) { EXPECT_THROW(SkewExpr::inverse(SkewExpr(X - X)), SingularInverse); }

TEST(Skew, DoubleInverseCancels) {
  const SkewExpr e = SkewExpr::inverse(SkewExpr(X + Y));
  const SkewExpr back = SkewExpr::inverse(e);
  ASSERT_TRUE(back.is_atom());
  EXPECT_EQ(back.as_atom(), X + Y);
}

class AextProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AextProperties, CentralFunctionsCommute) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 10; ++k) {
    const AElem f(s.central()), a = s.element(3);
    EXPECT_EQ(f * a, a * f);
  }
}

TEST_P(AextProperties, Associative) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 6; ++k) {
    const AElem a = s.element(2), b = s.element(2), c = s.element(2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST_P(AextProperties, QuotientRespectsCasimir) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 6; ++k) {
    UPoly p(RatFun(s.small()));
    for (int d = 0; d < 3; ++d) p = p * UPoly::gen(static_cast<Gen>(s.small(0, 3))) + UPoly(RatFun(s.small()));
    EXPECT_EQ(a_from_u(casimir() * p), (R * R - HB * HB) * a_from_u(p));
  }
}

TEST_P(AextProperties, RewriteOrderIndependent) {
  testgen::Source s(GetParam());
  const auto reps = default_reps();
  for (int k = 0; k < 6; ++k) {
    const AElem a = s.element(2), b = s.element(2), c = s.element(2);
    // left-to-right and right-to-left reduction of the same product
    const AElem lhs = (a * b) * c, rhs = a * (b * c);
    EXPECT_EQ(lhs, rhs);
    for (const Rep& r : reps)
      EXPECT_LT(relative_error(rep_eval(lhs, r), rep_eval(a, r) * rep_eval(b, r) * rep_eval(c, r)), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AextProperties, ::testing::Values(21u, 22u, 23u));

}  // namespace
