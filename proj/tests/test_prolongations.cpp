#include <gtest/gtest.h>

#include <optional>

#include "shl/complex_rep.hpp"
#include "shl/error.hpp"
#include "shl/linalg.hpp"
#include "shl/prolongations.hpp"
#include "shl/super_endo.hpp"
#include "support.hpp"

namespace shl {
namespace {

using test::rep;

struct DimCase {
  const char* spec;
  bool symmetric;
  std::size_t dim;
};

class Prolongation : public ::testing::TestWithParam<DimCase> {};

TEST_P(Prolongation, MatchesOracle) {
  const auto [spec, symmetric, dim] = GetParam();
  const auto r = rep(spec);
  const auto p = first_prolongation(r, symmetric);
  EXPECT_EQ(p.dim(), dim);
  EXPECT_EQ(p.dim(), oracle::prolongation_dim(test::to_input(*r), symmetric));
  const std::size_t d = r->space().dim();
  for (std::size_t j = 0; j < p.dim(); ++j)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const Vec a = p.value(j, x).col(y), b = p.value(j, y).col(x);
        for (std::size_t i = 0; i < d; ++i) EXPECT_EQ(a[i], symmetric ? b[i] : -b[i]);
      }
}

INSTANTIATE_TEST_SUITE_P(
    Dims, Prolongation,
    ::testing::Values(DimCase{"gl_real:2", true, 6}, DimCase{"gl_real:3", true, 18}, DimCase{"so:0,3", true, 0},
                      DimCase{"so:0,4", true, 0}, DimCase{"sp_real:1", true, 4}, DimCase{"sl_real:2", false, 0},
                      DimCase{"gl_real:2", false, 2}, DimCase{"so:0,3", false, 1}, DimCase{"so:0,4", false, 4},
                      DimCase{"so:1,3", false, 4}, DimCase{"so:0,5", false, 10}, DimCase{"sl_real:3", false, 6}));

TEST(Prolongation, ZeroAlgebra) {
  const auto z = share(SuperRep::make("zero", SuperSpace::canonical(0, 3, 0), {}));
  EXPECT_EQ(first_prolongation(z, true).dim(), 0u);
  EXPECT_EQ(first_prolongation(z, false).dim(), 0u);
  EXPECT_EQ(weak_curvature(z, ProlongKind::Eta).dim(), 0u);
  EXPECT_FALSE(weak_berger(weak_curvature(z, ProlongKind::Eta)).weak_berger);
}

TEST(Prolongation, RejectsGradedInput) { EXPECT_THROW(first_prolongation(rep("osp:1,0,2"), false), InputError); }

class Monotone : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Monotone, SoInsideGl) {
  const std::size_t n = GetParam();
  const auto so = rep("so:0," + std::to_string(n)), gl = rep("gl_real:" + std::to_string(n));
  for (bool symmetric : {true, false}) {
    const auto small = first_prolongation(so, symmetric).in_endomorphisms();
    const auto big = first_prolongation(gl, symmetric).in_endomorphisms();
    EXPECT_TRUE(big.contains(small)) << n << (symmetric ? " sym" : " skew");
  }
}

INSTANTIATE_TEST_SUITE_P(N, Monotone, ::testing::Values(2, 3, 4));

struct WeakCase {
  const char* spec;
  ProlongKind kind;
  std::optional<std::size_t> dim;  // nullopt: oracle only
};

class Weak : public ::testing::TestWithParam<WeakCase> {};

TEST_P(Weak, MatchesOracle) {
  const auto [spec, kind, dim] = GetParam();
  const auto r = rep(spec);
  const auto p = weak_curvature(r, kind);
  if (dim) {
    EXPECT_EQ(p.dim(), *dim);
  }
  EXPECT_EQ(p.dim(), oracle::weak_dim(test::to_input(*r)));
}

INSTANTIATE_TEST_SUITE_P(Dims, Weak,
                         ::testing::Values(WeakCase{"so:0,3", ProlongKind::Eta, 8},
                                           WeakCase{"so:0,4", ProlongKind::Eta, std::nullopt},
                                           WeakCase{"sp_real:1", ProlongKind::Omega, 2},
                                           WeakCase{"sp_real:2", ProlongKind::Omega, std::nullopt},
                                           WeakCase{"u:1,1", ProlongKind::Eta, std::nullopt}));

TEST(Weak, FormMismatch) {
  EXPECT_THROW(weak_curvature(rep("sl_real:2"), ProlongKind::Eta), InputError);
  EXPECT_THROW(weak_curvature(rep("so:0,3"), ProlongKind::Omega), InputError);
  EXPECT_THROW(weak_curvature(rep("sp_real:1"), ProlongKind::Eta), InputError);
}

TEST(Weak, ComplexSymplecticPlane) {
  const auto r = rep("sp_complex:1");
  const Mat j = realified_j(2, 0);
  for (std::size_t k = 0; k < r->size(); ++k) ASSERT_EQ(j * r->gen(k), r->gen(k) * j);
  ProlongOptions o;
  o.complex_structure = j;
  const auto p = weak_curvature(r, ProlongKind::Omega, o);
  // real dimension 4, complex dimension 2
  EXPECT_EQ(p.dim(), 4u);
}

TEST(Weak, Verdicts) {
  EXPECT_TRUE(weak_berger(weak_curvature(rep("so:0,3"), ProlongKind::Eta)).weak_berger);
  EXPECT_TRUE(weak_berger(weak_curvature(rep("sp_real:1"), ProlongKind::Omega)).weak_berger);
}

class BergerImpliesWeak : public ::testing::TestWithParam<const char*> {};

TEST_P(BergerImpliesWeak, OnEvenMetricAlgebras) {
  const auto r = rep(GetParam());
  const bool berger = is_berger(bianchi_kernel(r)).berger;
  const bool weak = weak_berger(weak_curvature(r, ProlongKind::Eta)).weak_berger;
  EXPECT_TRUE(!berger || weak) << GetParam();
}

INSTANTIATE_TEST_SUITE_P(Algebras, BergerImpliesWeak,
                         ::testing::Values("so:0,3", "so:1,2", "so:0,4", "u:2,0", "su:2,0", "u:1,1", "so_complex:2",
                                           "sp_real:1*sp_real:1", "adjoint:so:0,3", "so:0,2*so:0,2"));

// P in V* (x) g on L + L* splits into its restrictions to L and L*.
Subspace split_prolongations(const SuperRep& lifted, const RepPtr& on_l, const RepPtr& on_dual, bool symmetric) {
  const std::size_t l = on_l->space().dim(), n = lifted.size();
  const auto p1 = first_prolongation(on_l, symmetric), p2 = first_prolongation(on_dual, symmetric);
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < p1.dim(); ++j) {
    Vec v(2 * l * n);
    const Vec c = p1.basis.vector(j);
    std::copy(c.begin(), c.end(), v.begin());
    rows.push_back(v);
  }
  for (std::size_t j = 0; j < p2.dim(); ++j) {
    Vec v(2 * l * n);
    const Vec c = p2.basis.vector(j);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(l * n));
    rows.push_back(v);
  }
  return Subspace::span(rows, 2 * l * n);
}

class LPlusLDual : public ::testing::TestWithParam<const char*> {};

TEST_P(LPlusLDual, WeakSpacesSplitIntoProlongations) {
  const auto g = rep(GetParam());
  const auto gd = share(dual(*g));
  const std::size_t l = g->space().dim();
  for (bool symplectic : {false, true}) {
    const auto lifted = share(lplus_ldual(*g, symplectic));
    // Generator k of the lift is diag(g_k, -g_k^T).
    ASSERT_EQ(lifted->size(), g->size());
    for (std::size_t k = 0; k < g->size(); ++k) {
      ASSERT_EQ(lifted->gen(k).block(0, 0, l, l), g->gen(k));
      ASSERT_EQ(lifted->gen(k).block(l, l, l, l), gd->gen(k));
    }
    const auto p = weak_curvature(lifted, symplectic ? ProlongKind::Omega : ProlongKind::Eta);
    EXPECT_EQ(p.basis, split_prolongations(*lifted, g, gd, !symplectic)) << GetParam();
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, LPlusLDual, ::testing::Values("gl_real:2", "sl_real:2", "gl_real:1", "sl_real:3"));

}  // namespace
}  // namespace shl
