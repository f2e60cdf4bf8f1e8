#include <gtest/gtest.h>

#include "shl/algebra_io.hpp"
#include "shl/error.hpp"
#include "shl/linalg.hpp"
#include "shl/quaternion.hpp"
#include "shl/super_endo.hpp"
#include "support.hpp"

namespace shl {
namespace {

using test::rep;

BianchiOptions formless() {
  BianchiOptions o;
  o.allow_formless = true;
  return o;
}

class SoCurvature : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SoCurvature, MatchesOracleAndClassicalCount) {
  const std::size_t n = GetParam();
  const auto r = rep("so:0," + std::to_string(n));
  const auto cs = bianchi_kernel(r);
  EXPECT_EQ(cs.even.dim(), n * n * (n * n - 1) / 12);
  EXPECT_EQ(cs.odd.dim(), 0u);
  EXPECT_EQ(cs.even.dim(), oracle::curvature_dim(test::to_input(*r)));
}

INSTANTIATE_TEST_SUITE_P(N, SoCurvature, ::testing::Values(2, 3, 4, 5));

class GradedCurvature : public ::testing::TestWithParam<const char*> {};

TEST_P(GradedCurvature, MatchesOracle) {
  const auto r = rep(GetParam());
  const auto cs = bianchi_kernel(r);
  EXPECT_EQ(cs.even.dim() + cs.odd.dim(), oracle::curvature_dim(test::to_input(*r)));
}

INSTANTIATE_TEST_SUITE_P(Small, GradedCurvature,
                         ::testing::Values("adjoint:osp:1,0,2", "osp:2,0,2", "osp:1,0,2", "osp:0,1,2",
                                           "u_super:1,0,0,1", "so:1,2", "sp_real:1*so:0,2"));

TEST(Curvature, ZeroAlgebra) {
  const auto z = share(load_algebra(std::string(SHL_FIXTURES) + "/zero_algebra.json"));
  const auto cs = bianchi_kernel(z);
  EXPECT_EQ(cs.even.dim(), 0u);
  EXPECT_EQ(cs.odd.dim(), 0u);
  EXPECT_EQ(span_of_images(cs).dim(), 0u);
  EXPECT_FALSE(is_berger(cs).berger);
  const auto sk = second_kernel(cs);
  EXPECT_EQ(sk.even.dim() + sk.odd.dim(), 0u);
  const auto even_zero = share(SuperRep::make("zero", SuperSpace::canonical(0, 2, 0), {}));
  EXPECT_EQ(rbar_kernel(even_zero, formless()).even.dim(), 0u);
}

// The bracket tensor R(X,Y) = ad [X,Y] on the adjoint module.
Tensor2 bracket_tensor(const RepPtr& r, const CurvSpace& cs) {
  return tensor_from_values(r, cs.layout, Parity::Even,
                            [&](std::size_t a, std::size_t b) { return r->combine(r->gen(a).col(b)); });
}

TEST(Curvature, AdjointOsp12IsSpannedByBrackets) {
  const auto r = rep("adjoint:osp:1,0,2");
  // V is g itself: ad(e_a) e_b are the coordinates of [e_a, e_b].
  for (std::size_t a = 0; a < r->size(); ++a)
    for (std::size_t b = 0; b < r->size(); ++b)
      ASSERT_EQ(r->combine(r->gen(a).col(b)), supercommutator(r->gen(a), r->parity(a), r->gen(b), r->parity(b)));
  const auto cs = bianchi_kernel(r);
  ASSERT_EQ(cs.even.dim(), 1u);
  EXPECT_EQ(cs.odd.dim(), 0u);
  const Tensor2 t = bracket_tensor(r, cs);
  EXPECT_FALSE(t.is_zero());
  EXPECT_TRUE(cs.contains(t));
  for (std::size_t k = 0; k < r->size(); ++k) EXPECT_TRUE(act_on_curvature(r->gen(k), r->parity(k), t).is_zero());
}

TEST(Berger, Examples) {
  EXPECT_TRUE(is_berger(bianchi_kernel(rep("osp:2,0,2"))).berger);
  EXPECT_TRUE(is_berger(bianchi_kernel(rep("u_super:1,0,0,1"))).berger);
  const auto so3 = bianchi_kernel(rep("so:0,3"));
  EXPECT_EQ(span_of_images(so3).dim(), 3u);
  EXPECT_TRUE(is_berger(so3).berger);
}

TEST(Berger, QuaternionicComplexLineIsNot) {
  const auto r = rep("hosp:1,0,1+J");
  const auto v = is_berger(bianchi_kernel(r));
  EXPECT_FALSE(v.berger);
  EXPECT_LT(v.images.dim(), r->size());
  // The missing direction is the central J.
  ASSERT_FALSE(v.missing.empty());
  const auto center = test::center_of(*r);
  ASSERT_EQ(center.size(), 1u);
  EXPECT_FALSE(v.images.contains(center[0]));
  const Mat j = r->combine(center[0]);
  // J is a complex structure up to scale.
  const Rat s = (j * j)(0, 0);
  EXPECT_LT(s, 0);
  EXPECT_EQ(j * j, s * Mat::identity(8));
}

TEST(SecondKernel, Examples) {
  const auto so3 = second_kernel(bianchi_kernel(rep("so:0,3")));
  EXPECT_GT(so3.even.dim() + so3.odd.dim(), 0u);
  const auto sym = second_kernel(bianchi_kernel(rep("osp:1,0,2*so:0,3")));
  EXPECT_EQ(sym.even.dim(), 0u);
  EXPECT_EQ(sym.odd.dim(), 0u);
}

TEST(ActOnCurvature, CentralElementsAnnihilate) {
  const auto r = rep("u_super:1,0,0,1");
  const auto cs = bianchi_kernel(r);
  const auto center = test::center_of(*r);
  EXPECT_GE(center.size(), 1u);
  for (const auto& c : center)
    for (const auto& t : cs.basis()) EXPECT_TRUE(act_on_curvature(r->combine(c), Parity::Even, t).is_zero());
  for (const auto& t : cs.basis())
    EXPECT_TRUE(act_on_curvature(Mat(r->space().dim(), r->space().dim()), Parity::Even, t).is_zero());
}

TEST(BlockIdentities, UngradedInputIsAllA) {
  const auto cs = bianchi_kernel(rep("so:0,3"));
  for (const auto& t : cs.basis()) EXPECT_NO_THROW(block_decompose(t));
}

class RBar : public ::testing::TestWithParam<const char*> {};

TEST_P(RBar, DirectAndShiftedAgreeWithOracle) {
  const auto r = rep(GetParam());
  const auto direct = rbar_kernel(r, formless());
  const auto shifted = bianchi_kernel(share(parity_shift(*r)), formless());
  EXPECT_EQ(direct.even.dim(), shifted.even.dim());
  EXPECT_EQ(shifted.odd.dim(), 0u);
  EXPECT_EQ(direct.even.dim(), oracle::rbar_dim(test::to_input(*r)));
  for (const auto& t : direct.basis()) EXPECT_TRUE(satisfies_bianchi(t));
}

INSTANTIATE_TEST_SUITE_P(Small, RBar,
                         ::testing::Values("sp_real:1", "sp_real:2", "sl_real:2", "gl_real:2", "u:1,1", "su:2,0",
                                           "sl_real:2*so:0,3", "so:0,3"));

TEST(RBar, TensorWithSo3IsNonzero) {
  EXPECT_GT(rbar_kernel(rep("sl_real:2*so:0,3"), formless()).even.dim(), 0u);
}

TEST(QuaternionicCurvature, ClassicalCase) {
  const auto r = rep("sp_pq:1,0+sp1");
  const auto js = QuaternionicStructure::on(1, 0);
  const Tensor2 t = quaternionic_curvature(r, js);
  EXPECT_TRUE(satisfies_bianchi(t));
  EXPECT_TRUE(bianchi_kernel(r).contains(t));
  // R(X, J1 X) carries the -1/2 g(J1 X, J1 X) J1 term.
  EXPECT_FALSE(t.value(0, 1).is_zero());
}

TEST(QuaternionicCurvature, GradedCase) {
  const auto r = rep("hosp:1,0,1+sp1");
  const Tensor2 t = quaternionic_curvature(r, QuaternionicStructure::on(1, 1));
  EXPECT_TRUE(satisfies_bianchi(t));
  EXPECT_TRUE(pairing_symmetric(t));
  EXPECT_TRUE(bianchi_kernel(r).contains(t));
  const auto base = make("hosp", {1, 0, 1});
  bool escapes = false;
  for (std::size_t a = 0; a < 8 && !escapes; ++a)
    for (std::size_t b = a; b < 8 && !escapes; ++b) escapes = !base.contains(t.value(a, b));
  EXPECT_TRUE(escapes);
}

TEST(Rtau, ZeroTauGivesZero) {
  const auto a = make("osp_sk", {2, 1, 1}), b = make("sp_real", {1});
  const auto p = share(tensor_product(a, b));
  const Tau zero = [](std::size_t, std::size_t, std::size_t, std::size_t) { return Rat(0); };
  EXPECT_TRUE(rtau_curvature(p, a.space(), b.space(), zero).is_zero());
}

TEST(Rtau, TraceIdentity) {
  const auto a = make("osp_sk", {2, 1, 1}), b = make("sp_real", {1});
  std::mt19937 rng(7);
  std::vector<Rat> table(4 * 2 * 4 * 2);
  for (auto& x : table) x = test::random_rat(rng);
  const Tau product = [&](std::size_t x1, std::size_t x2, std::size_t u1, std::size_t u2) {
    return a.space().form(x1, u1) * b.space().form(x2, u2);
  };
  const Tau random = [&](std::size_t x1, std::size_t x2, std::size_t u1, std::size_t u2) {
    return table[((x1 * 2 + x2) * 4 + u1) * 2 + u2];
  };
  std::uniform_int_distribution<std::size_t> i4(0, 3), i2(0, 1);
  for (const Tau* tau : {&product, &random})
    for (int trial = 0; trial < 24; ++trial) {
      const std::size_t x1 = i4(rng), x2 = i2(rng), u1 = i4(rng), u2 = i2(rng);
      const auto parts = rtau_parts(a.space(), b.space(), *tau, x1, x2, u1, u2);
      const int s = koszul(bit(a.space().parity(u1)) * bit(a.space().parity(x1)));
      EXPECT_EQ(parts.b.trace(), (*tau)(x1, x2, u1, u2) - s * (*tau)(u1, u2, x1, x2));
    }
}

TEST(Rtau, ProductTauIsACurvatureTensor) {
  const auto a = make("osp", {1, 0, 2}), b = make("so", {0, 3});
  const auto p = share(tensor_product(a, b));
  const Tau tau = [&](std::size_t x1, std::size_t x2, std::size_t u1, std::size_t u2) {
    return a.space().form(x1, u1) * b.space().form(x2, u2);
  };
  const auto t = rtau_curvature(p, a.space(), b.space(), tau);
  EXPECT_FALSE(t.is_zero());
  EXPECT_TRUE(satisfies_bianchi(t));
  EXPECT_TRUE(bianchi_kernel(p).contains(t));
}

// Post-hoc re-verification of every basis tensor and of random combinations.
class CurvatureProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(CurvatureProperties, BasisAndRandomCombinations) {
  const auto r = rep(GetParam());
  const auto cs = bianchi_kernel(r);
  const bool graded = r->space().d0() > 0 && r->space().d1() > 0;
  for (const auto& t : cs.basis()) {
    EXPECT_TRUE(satisfies_bianchi(t));
    EXPECT_TRUE(pairing_symmetric(t));
    for (std::size_t k = 0; k < r->size(); ++k) EXPECT_TRUE(cs.contains(act_on_curvature(r->gen(k), r->parity(k), t)));
    if (graded) {
      EXPECT_NO_THROW(block_decompose(t));
    }
  }
  std::mt19937 rng(11);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    if (cs.dim(p) == 0) continue;
    Tensor2 sum = cs.tensor(p, 0);
    for (auto& c : sum.coords) c = 0;
    for (std::size_t i = 0; i < cs.dim(p); ++i) {
      const Rat f = test::random_rat(rng);
      const auto t = cs.tensor(p, i);
      for (std::size_t j = 0; j < sum.coords.size(); ++j) sum.coords[j] += f * t.coords[j];
    }
    EXPECT_TRUE(satisfies_bianchi(sum));
    EXPECT_TRUE(cs.contains(sum));
    if (graded) {
      EXPECT_NO_THROW(block_decompose(sum));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, CurvatureProperties,
                         ::testing::Values("so:0,4", "so:1,2", "osp:2,0,2", "osp:1,1,2", "osp:1,0,2", "osp:0,2,2",
                                           "u_super:1,0,0,1", "su_super:1,1,0,1", "hosp:1,0,1+sp1",
                                           "adjoint:osp:1,0,2", "osp:1,0,2*so:0,3"));

}  // namespace
}  // namespace shl
