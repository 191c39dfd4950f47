#include "generators.hpp"
#include "oracles.hpp"
#include "nccalc/ncmaxwell.hpp"
#include "nccalc/scalars.hpp"

#include <gtest/gtest.h>

using namespace nccalc;

namespace {

const ClassPoly CX = ClassPoly::gen(Gen::x), CY = ClassPoly::gen(Gen::y), CZ = ClassPoly::gen(Gen::z);
const UPoly UX = UPoly::gen(Gen::x), UY = UPoly::gen(Gen::y), UZ = UPoly::gen(Gen::z);
const RatFun HALF_H = h() / RatFun(2);

TEST(AlphaPoly, Examples) {
  EXPECT_EQ(alpha_poly(CX), UX);
  EXPECT_EQ(alpha_poly(CX * CY), UX * UY - HALF_H * UZ);
  // symmetrization oracle: (xy + yx)/2
  EXPECT_EQ(alpha_poly(CX * CY), RatFun(GaussRat(mpq_class(1, 2))) * (UX * UY + UY * UX));
  EXPECT_EQ(alpha_poly_inverse(UX * UY - UY * UX), ClassPoly::monomial(Mono3::letter(Gen::z), h()));
}

TEST(AlphaPoly, RejectsRadialCoefficients) { EXPECT_THROW(alpha_poly(ClassPoly(rho()) * CX), DomainError); }

TEST(AlphaPoly, IdentityAtClassicalLevel) {
  testgen::Source s(5);
  for (int k = 0; k < 10; ++k) {
    const ClassPoly p = s.class_poly(3);
    ClassPoly lim;
    const AElem a = a_from_u(alpha_poly(p));
    for (const auto& [m, c] : a.terms()) lim.add_term(m, limit_h0(c));
    EXPECT_EQ(lim, p.reduce_radius());
  }
}

TEST(AlphaCentral, Substitution) {
  const RatFun r = rho();
  EXPECT_EQ(alpha_central(g_sym() / r.pow(3)), g_sym() / r.pow(3));
  EXPECT_EQ(alpha_central(t_sym()), t_sym());
  EXPECT_EQ(alpha_central(RatFun(1) / (r * r + RatFun(1))), RatFun(1) / (r * r + RatFun(1)));
}

TEST(AlphaFraction, Examples) {
  const SkewExpr a = alpha_fraction(ClassPoly(1), CX);
  EXPECT_EQ(a.kind(), SkewExpr::Kind::inverse);
  EXPECT_EQ(a.left().as_atom(), AElem::gen(Gen::x));
  EXPECT_THROW(alpha_fraction(CX, ClassPoly()), ZeroDenominator);
  const SkewExpr folded = alpha_fraction(CZ, ClassPoly(rho() * rho()));
  ASSERT_TRUE(folded.is_atom());
  EXPECT_EQ(folded.as_atom(), rho().pow(-2) * AElem::gen(Gen::z));
}

TEST(AlphaFraction, SelfQuotientIsIdentity) {
  const ClassPoly f = CX * CY + CZ;
  const SkewExpr e = alpha_fraction(f, f);
  int checked = 0;
  for (const Rep& r : default_reps()) {
    try {
      EXPECT_LT(relative_error(rep_eval(e, r), CMat::Identity(r.dim(), r.dim())), 1e-10);
      ++checked;
    } catch (const SingularInverse&) {
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(AlphaOperator, Examples) {
  const AElem a = AElem::gen(Gen::y) * AElem::gen(Gen::z) * AElem::gen(Gen::x);
  ClassOp dx{{{ClassPoly(1), ClassPoly(1), DMono{0, 1, 0, 0}}}};
  EXPECT_EQ(alpha_operator(dx).apply(a).as_atom(), deriv(DGen::x, a));
  ClassOp xdy{{{CX, ClassPoly(1), DMono{0, 0, 1, 0}}}};
  EXPECT_EQ(alpha_operator(xdy).apply(a).as_atom(), AElem::gen(Gen::x) * deriv(DGen::y, a));
}

TEST(AlphaOperator, DivergenceIsQuantizedClassicalFormula) {
  const VecField hfield = monopole(g_sym());
  ClassOp parts[3];
  for (int k = 0; k < 3; ++k) {
    DMono d{};
    d[k + 1] = 1;
    parts[k].terms.push_back({ClassPoly(1), ClassPoly(1), d});
  }
  SkewExpr sum;
  for (int k = 0; k < 3; ++k) sum = sum + alpha_operator(parts[k]).apply(hfield[k]);
  ASSERT_TRUE(sum.is_atom());
  EXPECT_EQ(sum.as_atom(), div(hfield));
}

TEST(StarProduct, Examples) {
  EXPECT_EQ(star_product(CX, CY) - star_product(CY, CX), ClassPoly::monomial(Mono3::letter(Gen::z), h()));
  const ClassPoly f = CX * CX * CZ + CY;
  EXPECT_EQ(star_product(ClassPoly(1), f), f);
  EXPECT_EQ(star_product(star_product(CX, CY), CZ), star_product(CX, star_product(CY, CZ)));
}

TEST(AlphaForm, Examples) {
  EXPECT_EQ(alpha_form({{0b0010, ClassPoly(1)}}), Form::term(0b0010, AElem(1)));
  const AElem xy = AElem::gen(Gen::x) * AElem::gen(Gen::y) - HALF_H * AElem::gen(Gen::z);
  EXPECT_EQ(alpha_form({{0, CX * CY}}), Form::term(0, xy));
}

TEST(AlphaForm, DoesNotIntertwineD) {
  const auto w = find_noncommuting_form();
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(alpha_form(classical_d(*w)), d_op(alpha_form(*w)));
  // x^2 is the smallest witness: d_t(x^2) = -h/2 has no classical counterpart
  const ClassForm x2{{0, CX * CX}};
  EXPECT_NE(alpha_form(classical_d(x2)), d_op(alpha_form(x2)));
}

class QuantProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(QuantProperties, RoundTripUpToDegreeFour) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 10; ++k) {
    const ClassPoly p = s.class_poly(4);
    EXPECT_EQ(alpha_poly_inverse(alpha_poly(p)), p);
  }
}

TEST_P(QuantProperties, StarAssociativeAndUnital) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 5; ++k) {
    const ClassPoly a = s.class_poly(3), b = s.class_poly(3), c = s.class_poly(3);
    EXPECT_EQ(star_product(star_product(a, b), c), star_product(a, star_product(b, c)));
    EXPECT_EQ(star_product(a, ClassPoly(1)), a);
  }
}

TEST_P(QuantProperties, FirstOrderIsLiePoisson) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 10; ++k) {
    std::array<long, 3> a{s.small(), s.small(), s.small()}, b{s.small(), s.small(), s.small()};
    const ClassPoly f = RatFun(a[0]) * CX + RatFun(a[1]) * CY + RatFun(a[2]) * CZ;
    const ClassPoly g = RatFun(b[0]) * CX + RatFun(b[1]) * CY + RatFun(b[2]) * CZ;
    ClassPoly bracket = star_product(f, g) - star_product(g, f);
    ClassPoly first;
    for (const auto& [m, c] : bracket.terms()) first.add_term(m, limit_h0(c / h()));
    // {x, y} = z cyclic: the bracket of linear forms is the cross product
    const ClassPoly expected = RatFun(a[1] * b[2] - a[2] * b[1]) * CX + RatFun(a[2] * b[0] - a[0] * b[2]) * CY +
                               RatFun(a[0] * b[1] - a[1] * b[0]) * CZ;
    EXPECT_EQ(first, expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, QuantProperties, ::testing::Values(51u, 52u, 53u));

}  // namespace
