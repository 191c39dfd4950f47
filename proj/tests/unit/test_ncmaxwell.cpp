#include "generators.hpp"
#include "oracles.hpp"
#include "nccalc/ncmaxwell.hpp"
#include "nccalc/scalars.hpp"

#include <gtest/gtest.h>

using namespace nccalc;

namespace {

const AElem X = AElem::gen(Gen::x), Y = AElem::gen(Gen::y), Z = AElem::gen(Gen::z);
const RatFun R = rho(), HB = hbar();

bool is_zero(const VecField& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

TEST(Div, Examples) {
  EXPECT_EQ(div({X, Y, Z}), AElem(3));
  EXPECT_TRUE(div(monopole(g_sym())).is_zero());
}

TEST(Div, RadialFormula) {
  for (const RatFun& f : {R * R, RatFun(1) / (R * R + RatFun(1)), t_sym() / R, R.pow(-3)}) {
    // t enters through the shift t -> t + i hbar.
    const RatFun ft = shift_t(f);
    const RatFun up = shift_rho(ft, 1), down = shift_rho(ft, -1);
    const RatFun expected = ((R * R - HB * HB) / R) * drho(ft) +
                            RatFun(3) * (up * (R + HB) + down * (R - HB)) / (RatFun(2) * R);
    EXPECT_EQ(div(radial_field(f)), AElem(expected));
  }
}

TEST(Rot, RadialFieldsAreCurlFree) {
  EXPECT_TRUE(is_zero(rot(radial_field(R * R))));
  EXPECT_TRUE(is_zero(rot(radial_field(RatFun(1) / (R * R + RatFun(1))))));
  EXPECT_TRUE(is_zero(rot(monopole(g_sym()))));
}

TEST(Rot, LinearField) {
  const VecField r = rot({Y, AElem(), AElem()});
  EXPECT_TRUE(r[0].is_zero());
  EXPECT_TRUE(r[1].is_zero());
  EXPECT_EQ(a_classical_limit(r[2]), ClassPoly(-1));
}

TEST(MonopoleResidual, Examples) {
  EXPECT_TRUE(monopole_residual(monopole_profile(g_sym())).is_zero());
  EXPECT_FALSE(monopole_residual(g_sym() / R.pow(3)).is_zero());
  EXPECT_THROW(monopole_residual(t_sym() / R), DomainError);
}

TEST(MonopoleResidual, ZeroIffDivergenceFree) {
  testgen::Source s(2);
  std::vector<RatFun> samples{monopole_profile(RatFun(3)), R.inverse(), R.pow(-3), RatFun(1) / (R * R + RatFun(5))};
  for (int k = 0; k < 6; ++k) {
    const RatFun f = s.central();
    if (!f.depends_on(Var::t)) samples.push_back(f);
  }
  for (const RatFun& f : samples)
    EXPECT_EQ(monopole_residual(f).is_zero(), div(radial_field(f)).is_zero()) << f.to_string(kSymbolNames);
}

TEST(MonopoleResidual, ResidualIsProportionalToDivergence) {
  for (const RatFun& f : {R.pow(-3), R * R, RatFun(1) / (R * R + RatFun(3))}) {
    const AElem d = div(radial_field(f));
    ASSERT_TRUE(d.is_central());
    EXPECT_EQ(d.central_part() * RatFun(2) * HB * R, monopole_residual(f));
  }
}

TEST(Monopole, Examples) {
  EXPECT_EQ(limit_h0(monopole_profile(g_sym())), g_sym() / R.pow(3));
  EXPECT_TRUE(is_zero(monopole(RatFun())));
}

TEST(RadialPairing, Examples) {
  EXPECT_EQ(radial_pairing(R * R, Endpoint::at(RatFun(1)), Endpoint::at(RatFun(2))), RatFun(3));
  EXPECT_EQ(radial_pairing(RatFun(1) / (R + RatFun(1)), Endpoint::zero(), Endpoint::infinity()), RatFun(-1));
  EXPECT_THROW(radial_pairing(R.inverse(), Endpoint::zero(), Endpoint::at(RatFun(1))), IrregularTestFunction);
  EXPECT_THROW(radial_pairing(R * R, Endpoint::zero(), Endpoint::infinity()), IrregularTestFunction);
}

TEST(MonopolePairing, MinusFourPiPhiAtZero) {
  const PiMultiple p = monopole_pairing(RatFun(1) / (RatFun(1) + R * R), RatFun(1));
  EXPECT_EQ(p.coeff, RatFun(-4));
  for (const RatFun& phi : {RatFun(3) / (R.pow(4) + RatFun(2)), (R + RatFun(2)) / (R * R + RatFun(4)) / (R + RatFun(1))}) {
    const RatFun phi0 = phi.substitute(Var::rho, RatFun());
    EXPECT_EQ(monopole_pairing(phi, g_sym()).coeff, RatFun(-4) * g_sym() * phi0);
  }
  EXPECT_THROW(monopole_pairing(R * R / (RatFun(1) + R * R), RatFun(1)), IrregularTestFunction);
  EXPECT_THROW(monopole_pairing(RatFun(1) / R, RatFun(1)), IrregularTestFunction);
}

TEST(VectorPotential, ConstructionAndErrors) {
  const auto a = vector_potential({GaussRat(0), GaussRat(0), GaussRat(1)}, RatFun(1));
  EXPECT_FALSE(a[0].is_atom());
  EXPECT_TRUE(a[2].is_zero());
  EXPECT_THROW(vector_potential({GaussRat(1), GaussRat(1), GaussRat(0)}, RatFun(1)), NonUnitVector);
  const GaussRat three_fifths(mpq_class(3, 5)), four_fifths(mpq_class(4, 5));
  EXPECT_NO_THROW(vector_potential({three_fifths, GaussRat(0), four_fifths}, g_sym()));
}

TEST(VectorPotential, FirstComponentIsYOverRhoTimesRhoMinusZ) {
  const auto a = vector_potential({GaussRat(0), GaussRat(0), GaussRat(1)}, RatFun(1));
  const SkewExpr oracle = SkewExpr(Y) * SkewExpr::inverse(SkewExpr(AElem(R) - Z)) * SkewExpr(R.inverse());
  int checked = 0;
  for (const Rep& r : default_reps()) {
    try {
      EXPECT_LT(relative_error(rep_eval(a[0], r), rep_eval(oracle, r)), 1e-9) << r.label();
      ++checked;
    } catch (const SingularInverse&) {
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(VectorPotential, ClassicalLimitApproachesClassicalPotential) {
  const std::array<double, 3> n{0.0, 0.6, 0.8};
  const auto a = vector_potential({GaussRat(0), GaussRat(mpq_class(3, 5)), GaussRat(mpq_class(4, 5))}, g_sym());
  const std::array<std::complex<double>, 3> p{0.7, -0.3, 0.45};
  const auto classical = classical_potential(n, 1.5, p);
  double prev = 1e300;
  for (double hb : {1e-2, 1e-4, 1e-6}) {
    double err = 0;
    for (int k = 0; k < 3; ++k)
      err = std::max(err, std::abs(a[k].classical_value(p, hb, 0.0, 1.5) - classical[k]));
    EXPECT_LE(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-5);
}

class MaxwellProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MaxwellProperties, RotOfRadialFieldVanishes) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 8; ++k) EXPECT_TRUE(is_zero(rot(radial_field(s.central()))));
}

TEST_P(MaxwellProperties, DivCommutesWithCyclicRotation) {
  testgen::Source s(GetParam());
  // x -> y -> z -> x is an automorphism of the relations
  auto rotate = [](const AElem& a) {
    AElem out;
    for (const auto& [m, c] : a.terms()) {
      AElem term(c);
      for (unsigned k = 0; k < m.e[0]; ++k) term = term * AElem::gen(Gen::y);
      for (unsigned k = 0; k < m.e[1]; ++k) term = term * AElem::gen(Gen::z);
      for (unsigned k = 0; k < m.e[2]; ++k) term = term * AElem::gen(Gen::x);
      out += term;
    }
    return out;
  };
  for (int k = 0; k < 6; ++k) {
    const VecField v{s.element(2), s.element(2), s.element(2)};
    const VecField rotated{rotate(v[2]), rotate(v[0]), rotate(v[1])};
    EXPECT_EQ(div(rotated), rotate(div(v)));
  }
}

TEST_P(MaxwellProperties, ClassicalLimitsOfVectorCalculus) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 6; ++k) {
    std::array<testgen::LinearProduct, 3> comps{s.product(3), s.product(3), s.product(3)};
    const VecField v{testgen::Source::to_aelem(comps[0]), testgen::Source::to_aelem(comps[1]),
                     testgen::Source::to_aelem(comps[2])};
    const std::array<std::complex<double>, 4> pt{0.2, 0.5, -0.8, 0.3};
    std::array<oracle::ClassicalJet, 3> j;
    for (int c = 0; c < 3; ++c) j[c] = oracle::classical_jet(comps[c], pt);
    const std::complex<double> div_cl = j[0].d[1] + j[1].d[2] + j[2].d[3];
    EXPECT_LT(std::abs(oracle::classical_value(a_classical_limit(div(v)), pt) - div_cl), 1e-9 * (1 + std::abs(div_cl)));
    const VecField r = rot(v);
    const std::array<std::complex<double>, 3> rot_cl{j[2].d[2] - j[1].d[3], j[0].d[3] - j[2].d[1], j[1].d[1] - j[0].d[2]};
    for (int c = 0; c < 3; ++c)
      EXPECT_LT(std::abs(oracle::classical_value(a_classical_limit(r[c]), pt) - rot_cl[c]), 1e-9 * (1 + std::abs(rot_cl[c])));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MaxwellProperties, ::testing::Values(61u, 62u, 63u));

}  // namespace
