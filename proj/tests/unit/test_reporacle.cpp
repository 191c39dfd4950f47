#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nccalc;
using Complex = std::complex<double>;

namespace {

TEST(MakeRep, SpinHalfPauliType) {
  const Rep r = make_rep(1, 0.0, 1.0);
  // x = i h Jx, y = -i h Jy, z = i h Jz with J = sigma / 2
  CMat x(2, 2), y(2, 2), z(2, 2);
  x << 0, Complex(0, 0.5), Complex(0, 0.5), 0;
  y << 0, Complex(-0.5, 0), Complex(0.5, 0), 0;
  z << Complex(0, 0.5), 0, 0, Complex(0, -0.5);
  EXPECT_LT(relative_error(r.x, x), 1e-15);
  EXPECT_LT(relative_error(r.y, y), 1e-15);
  EXPECT_LT(relative_error(r.z, z), 1e-15);
}

TEST(MakeRep, RelationsHold) {
  for (const Rep& r : default_reps()) {
    EXPECT_LT(relation_defect(r), 1e-12) << r.label();
    EXPECT_LT(relative_error(r.x * r.y - r.y * r.x, r.hval * r.z), 1e-12);
    const CMat cas = r.x * r.x + r.y * r.y + r.z * r.z;
    const int n = r.dim();
    EXPECT_LT(relative_error(cas, cas(0, 0) * CMat::Identity(n, n)), 1e-12);
    EXPECT_LT(std::abs(r.rho * r.rho - (cas(0, 0) + r.hbar * r.hbar)), 1e-12);
    EXPECT_LT(std::abs(r.hval - Complex(0, 2) * r.hbar), 1e-15);
  }
}

TEST(MakeRep, Errors) {
  EXPECT_THROW(make_rep(1, 0.0, 0.0), DomainError);
  const Rep r = make_rep(2, 0.0, 1.0);
  EXPECT_THROW(rep_from_matrices(2, 0.0, 1.0, 1.25, r.x, -r.y, r.z), RelationViolation);
  EXPECT_NO_THROW(rep_from_matrices(2, 0.0, 1.0, 1.25, r.x, r.y, r.z));
}

TEST(MakeRep, SpecializedHbarPinsH) {
  HbarScope scope(GaussRat(0, mpq_class(-1, 4)));
  for (const Rep& r : default_reps()) EXPECT_LT(std::abs(r.hval - Complex(0.5)), 1e-15);
}

TEST(RepEval, Examples) {
  const AElem x = AElem::gen(Gen::x), y = AElem::gen(Gen::y), z = AElem::gen(Gen::z);
  for (const Rep& r : default_reps()) {
    const CMat m = rep_eval(x * y - y * x - h() * z, r);
    EXPECT_LT(m.cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(rep_eval(ch_residual(), r).cwiseAbs().maxCoeff(), 1e-12);
    try {
      const CMat inv = rep_eval(SkewExpr::inverse(SkewExpr(x)), r);
      EXPECT_LT(relative_error(r.x * inv, CMat::Identity(r.dim(), r.dim())), 1e-10);
    } catch (const SingularInverse&) {
      EXPECT_EQ(r.two_j % 2, 0);
    }
  }
}

TEST(CheckIdentity, Reports) {
  const AElem x = AElem::gen(Gen::x), y = AElem::gen(Gen::y), z = AElem::gen(Gen::z);
  const auto reps = default_reps();
  EXPECT_TRUE(check_identity(deriv(DGen::x, y * z), AElem(h() / RatFun(2)), reps, 1e-12).pass);
  std::vector<Rep> bad;
  for (const Rep& r : reps) bad.push_back(corrupted_rep(r));
  // x^-1 y x = y - h x^-1 z, with the left side multiplied out numerically.
  const SkewExpr sx(x), sy(y), xi = SkewExpr::inverse(sx);
  const SkewExpr lhs = xi * sy * sx, rhs = sy - xi * SkewExpr(h() * z);
  EXPECT_TRUE(check_identity(lhs, rhs, reps, 1e-10).pass);
  const CheckReport control = check_identity(lhs, rhs, bad, 1e-10);
  EXPECT_FALSE(control.pass);
  EXPECT_GT(control.max_error, 1e-3);
}

TEST(CheckIdentity, SkipsSingularReps) {
  const SkewExpr xi = SkewExpr::inverse(SkewExpr(AElem::gen(Gen::x)));
  const CheckReport rep = check_identity(SkewExpr(AElem::gen(Gen::x)) * xi, SkewExpr(1), default_reps(), 1e-10);
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.skipped, 0);
  EXPECT_GT(rep.checked, 0);
}

class OracleProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleProperties, HomomorphismOnRandomPairs) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 8; ++k) {
    const AElem a = s.element(3), b = s.element(3);
    for (const Rep& r : default_reps())
      EXPECT_LT(relative_error(rep_eval(a * b, r), rep_eval(a, r) * rep_eval(b, r)), 1e-12) << r.label();
  }
}

TEST_P(OracleProperties, ThetaMultiplicativeNumerically) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 4; ++k) {
    const AElem a = s.element(2), b = s.element(2);
    const CheckReport rep = check_identity(theta_hat(a * b), theta_hat(a) * theta_hat(b), default_reps(), 1e-10);
    EXPECT_TRUE(rep.pass);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleProperties, ::testing::Values(71u, 72u));

}  // namespace
