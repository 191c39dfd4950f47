#include "generators.hpp"
#include "nccalc/reporacle.hpp"

#include <gtest/gtest.h>

using namespace nccalc;

namespace {

UPoly G(Gen g) { return UPoly::gen(g); }
const UPoly T = G(Gen::t), X = G(Gen::x), Y = G(Gen::y), Z = G(Gen::z);

TEST(PbwNormalize, Examples) {
  EXPECT_EQ(pbw_normalize({Gen::y, Gen::x}), X * Y - h() * Z);
  EXPECT_EQ(pbw_normalize({Gen::z, Gen::y}), Y * Z - h() * X);
  const UPoly xt = pbw_normalize({Gen::x, Gen::t});
  ASSERT_EQ(xt.terms().size(), 1u);
  EXPECT_EQ(xt.terms().begin()->first.t, 1);
  EXPECT_EQ(xt.terms().begin()->first.xyz.e[0], 1);
}

TEST(PbwNormalize, IsIdempotent) {
  const UPoly p = pbw_normalize({Gen::z, Gen::y, Gen::x, Gen::z});
  UPoly again;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Gen> word(m.t, Gen::t);
    for (int k = 0; k < 3; ++k) word.insert(word.end(), m.xyz.e[k], static_cast<Gen>(k + 1));
    again = again + c * pbw_normalize(word);
  }
  EXPECT_EQ(again, p);
}

TEST(UMul, Examples) {
  EXPECT_EQ(u_mul(Y, Z) - u_mul(Z, Y), h() * X);
  const UPoly p = X * Y * Z + T;
  EXPECT_EQ(u_mul(UPoly(1), p), p);
  EXPECT_EQ(u_mul(u_mul(X, Y), Z), u_mul(X, u_mul(Y, Z)));
}

TEST(GenMatrixN, Entries) {
  const UMat n = gen_matrix_N();
  const RatFun i(GaussRat::i());
  EXPECT_EQ(n(0, 0), T - i * Z);
  EXPECT_EQ(n(0, 1), -(i * X) - Y);
  EXPECT_EQ(n(0, 0) + n(1, 1), RatFun(2) * T);
}

TEST(ChResidual, IsZero) { EXPECT_TRUE(ch_residual().is_zero()); }

TEST(ChResidual, EntryOneOneByHand) {
  const RatFun i(GaussRat::i());
  const UPoly cas = X * X + Y * Y + Z * Z;
  const UPoly n11 = T - i * Z, n12 = -(i * X) - Y, n21 = -(i * X) + Y;
  const UPoly expansion = n11 * n11 + n12 * n21 - (RatFun(2) * T + UPoly(h())) * n11 + (T * T + cas + h() * T);
  EXPECT_TRUE(expansion.is_zero());
}

TEST(ChResidual, ClassicalSpecialization) {
  HbarScope scope(GaussRat(0, mpq_class(1, 7)));
  EXPECT_TRUE(ch_residual().is_zero());
}

TEST(BraidResidual, IsZero) { EXPECT_TRUE(braid_residual().is_zero()); }

TEST(BraidResidual, FlipIsInvolution) {
  const UMat p = flip_matrix();
  EXPECT_EQ(p * p, UMat::identity(4));
}

TEST(Casimir, IsCentral) {
  testgen::Source s(11);
  const UPoly cas = casimir();
  for (int k = 0; k < 10; ++k) {
    UPoly p(1);
    for (int d = 0; d < 3; ++d) p = p * G(static_cast<Gen>(s.small(0, 3))) + UPoly(RatFun(s.small()));
    EXPECT_EQ(cas * p, p * cas);
    EXPECT_EQ(T * p, p * T);
  }
}

class UpbwProperties : public ::testing::TestWithParam<std::uint64_t> {};

UPoly random_upoly(testgen::Source& s, unsigned max_degree) {
  UPoly p;
  for (int k = 0; k < 3; ++k) {
    UPoly term(RatFun(s.small()));
    const unsigned d = static_cast<unsigned>(s.small(0, max_degree));
    for (unsigned j = 0; j < d; ++j) term = term * G(static_cast<Gen>(s.small(0, 3)));
    p = p + term;
  }
  return p;
}

TEST_P(UpbwProperties, AssociativeAndUnital) {
  testgen::Source s(GetParam());
  for (int k = 0; k < 8; ++k) {
    const UPoly a = random_upoly(s, 4), b = random_upoly(s, 4), c = random_upoly(s, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(UPoly(1) * a, a);
    EXPECT_EQ(a * UPoly(1), a);
  }
}

TEST_P(UpbwProperties, RepresentationIsHomomorphism) {
  testgen::Source s(GetParam());
  const auto reps = default_reps();
  for (int k = 0; k < 5; ++k) {
    const UPoly a = random_upoly(s, 3), b = random_upoly(s, 3);
    for (const Rep& r : reps)
      EXPECT_LT(relative_error(rep_eval(a * b, r), rep_eval(a, r) * rep_eval(b, r)), 1e-12) << r.label();
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, UpbwProperties, ::testing::Values(5u, 6u, 7u));

}  // namespace
