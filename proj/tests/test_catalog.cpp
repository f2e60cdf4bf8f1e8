#include <gtest/gtest.h>

#include <cstdlib>

#include "shl/algebra_io.hpp"
#include "shl/complex_rep.hpp"
#include "shl/error.hpp"
#include "shl/linalg.hpp"
#include "shl/prolongations.hpp"
#include "shl/quaternion.hpp"
#include "support.hpp"

namespace shl {
namespace {

std::string fixture(const char* name) { return std::string(SHL_FIXTURES) + "/" + name; }

TEST(Catalog, Osp202) {
  const auto r = make("osp", {2, 0, 2});
  EXPECT_EQ(r.space().d0(), 2u);
  EXPECT_EQ(r.space().d1(), 2u);
  EXPECT_EQ(r.even_count(), 4u);  // so(2) + sp(2,R)
  EXPECT_EQ(r.odd_count(), 4u);
}

TEST(Catalog, So3) {
  const auto r = make("so", {0, 3});
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(r.space().d0(), 3u);
  EXPECT_EQ(r.space().d1(), 0u);
}

TEST(Catalog, HospWithSp1) {
  const auto r = make("hosp", {1, 0, 1}, CenterExtension::QuaternionicSp1);
  EXPECT_EQ(r.space().d0(), 4u);
  EXPECT_EQ(r.space().d1(), 4u);
  EXPECT_EQ(r.size(), make("hosp", {1, 0, 1}).size() + 3);
}

TEST(Catalog, UnknownFamily) {
  EXPECT_THROW(make(AlgebraSpec::parse("nope:1")), InputError);
  EXPECT_THROW(AlgebraSpec::parse("so:(0,3"), InputError);
  EXPECT_THROW(AlgebraSpec::parse(""), InputError);
}

TEST(Catalog, CeilingCarriesSizes) {
  try {
    make(AlgebraSpec::parse("so:0,40"), 16);
    FAIL() << "no ceiling";
  } catch (const CeilingError& e) {
    EXPECT_EQ(e.requested(), 40u);
    EXPECT_EQ(e.limit(), 16u);
  }
}

TEST(Catalog, EnvironmentCeiling) {
  ::setenv("SHL_MAX_SIZE", "7", 1);
  EXPECT_EQ(default_max_size(), 7u);
  ::unsetenv("SHL_MAX_SIZE");
  EXPECT_EQ(default_max_size(), 16u);
}

class Grammar : public ::testing::TestWithParam<const char*> {};

TEST_P(Grammar, RoundTripsAndPredictsDimension) {
  const auto s = AlgebraSpec::parse(GetParam());
  EXPECT_EQ(AlgebraSpec::parse(s.str()).str(), s.str());
  const auto r = make(s, 64);
  EXPECT_EQ(predicted_dim(s), r.space().dim()) << s.str();
}

INSTANTIATE_TEST_SUITE_P(
    Specs, Grammar,
    ::testing::Values("so:0,3", "so:2,3+R", "sp_real:2", "sp_pq:1,1", "u:1,1", "su:2,0", "sl_real:3", "gl_real:2",
                      "so_complex:2", "sl_complex:2", "sp_complex:1", "osp:2,0,2", "osp:1,1,2", "osp_sk:2,1,1",
                      "osp_complex:1,2", "u_super:1,0,0,1", "su_super:1,1,0,1", "hosp:1,0,1+sp1", "hosp:0,1,1+J",
                      "pe:2", "sl_quat:1", "gl_quat:1", "so_quat:2", "quat_herm:2", "quat_skew:2",
                      "quat_bimod:1,2", "complex_herm:2", "adjoint:osp:1,0,2", "adjoint:so:0,3",
                      "complex:sp_real:1", "complex:(osp_sk:2,1,0*sp_real:1)", "sym2:sl_real:2",
                      "alt2:sl_real:3", "sym2:sl_real:2+R", "kahler:su:2,0", "osp:1,0,2*so:0,3",
                      "(complex:sp_real:1)*sp_real:1", "so:0,2*so:0,2*so:0,2"));

TEST(Grammar, Precedence) {
  const auto s = AlgebraSpec::parse("sp_real:1*so:0,3+R");
  EXPECT_EQ(s.family, "scalar");
  ASSERT_EQ(s.inner.size(), 1u);
  EXPECT_EQ(s.inner[0].family, "tensor");
  // A prefix takes the whole product.
  const auto c = AlgebraSpec::parse("complex:sp_real:1*so:0,3");
  EXPECT_EQ(c.family, "complex");
  EXPECT_EQ(c.inner[0].family, "tensor");
  const auto d = AlgebraSpec::parse("(complex:sp_real:1)*so:0,3");
  EXPECT_EQ(d.family, "tensor");
  EXPECT_EQ(d.inner[0].family, "complex");
  const auto h = AlgebraSpec::parse("hosp:1,0,1+sp1");
  EXPECT_EQ(h.center, CenterExtension::QuaternionicSp1);
  EXPECT_EQ(h.params, (std::vector<long>{1, 0, 1}));
}

TEST(Realify, ComplexOrthogonalPlane) {
  const auto r = make("so_complex", {2});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.space().d0(), 4u);
  EXPECT_EQ(r.space().signature(), (std::pair<std::size_t, std::size_t>{2, 2}));
  for (std::size_t k = 0; k < r.size(); ++k) EXPECT_TRUE(osp_check(r.space(), r.generator(k)));
}

TEST(Realify, ScalarIIsJ) {
  ComplexRep c;
  c.name = "i on C";
  c.d0 = 1;
  c.gens.push_back({CMat{Mat(1, 1), Mat{{1}}}, Parity::Even});
  const auto r = realify(c);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r.contains(realified_j(1, 0)));
  EXPECT_EQ(realified_j(1, 0), (Mat{{0, -1}, {1, 0}}));
}

TEST(Realify, ComplexSymplectic) {
  const auto r = make("sp_complex", {1});
  EXPECT_EQ(r.size(), 6u);
  EXPECT_EQ(r.space().dim(), 4u);
  EXPECT_TRUE(r.space().has_form());
}

TEST(Adjoint, Osp12) {
  const auto r = make(AlgebraSpec::parse("adjoint:osp:1,0,2"));
  EXPECT_EQ(r.space().d0(), 3u);
  EXPECT_EQ(r.space().d1(), 2u);
  EXPECT_NE(determinant(r.space().gram_even()), 0);
  EXPECT_NE(determinant(r.space().gram_odd()), 0);
}

TEST(Adjoint, So3KillingFormIsDefinite) {
  const auto r = make(AlgebraSpec::parse("adjoint:so:0,3"));
  const auto [neg, pos] = r.space().signature();
  EXPECT_TRUE((neg == 3 && pos == 0) || (neg == 0 && pos == 3));
}

TEST(Adjoint, Sl2KillingFormIsIndefinite) {
  const auto r = make(AlgebraSpec::parse("adjoint:sl_real:2"));
  const auto [neg, pos] = r.space().signature();
  EXPECT_EQ(neg + pos, 3u);
  EXPECT_TRUE(neg == 1 || pos == 1);
}

TEST(AlgebraIo, FixtureRoundTrip) {
  const auto loaded = load_algebra(fixture("osp_2_0_2.json"));
  const auto built = make("osp", {2, 0, 2});
  ASSERT_EQ(loaded.size(), built.size());
  for (std::size_t k = 0; k < built.size(); ++k) EXPECT_TRUE(loaded.contains(built.gen(k)));
  EXPECT_EQ(loaded.space(), built.space());
  EXPECT_EQ(emit_algebra(parse_algebra(emit_algebra(built))), emit_algebra(built));
}

TEST(AlgebraIo, AbelianLine) {
  const auto r = load_algebra(fixture("e12_r3.json"));
  EXPECT_EQ(r.size(), 1u);
  EXPECT_TRUE(is_zero(r.bracket_coords(0, 0)));
}

TEST(AlgebraIo, ZeroAlgebra) {
  const auto r = load_algebra(fixture("zero_algebra.json"));
  EXPECT_EQ(r.size(), 0u);
  EXPECT_EQ(r.space().dim(), 4u);
}

TEST(AlgebraIo, NonClosedRejectedWithWitness) {
  try {
    load_algebra(fixture("not_closed.json"));
    FAIL() << "accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("[b0, b0]"), std::string::npos) << e.what();
  }
}

TEST(AlgebraIo, SchemaErrorsNameTheLocation) {
  try {
    parse_algebra(R"({"name":"x","space":{"d0":2,"d1":0,"p":0,"q":2},"generators":[{"parity":"even","matrix":[["0","1"],["-1"]]}]})");
    FAIL() << "accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("generators[0].matrix"), std::string::npos) << e.what();
  }
  try {
    parse_algebra(R"({"name":"x","space":{"d0":1,"d1":0,"p":0,"q":1},"generators":[{"parity":"even","matrix":[["1/0"]]}]})");
    FAIL() << "accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("generators[0].matrix[0][0]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_algebra("{"), InputError);
  EXPECT_THROW(load_algebra(fixture("missing.json")), InputError);
}

TEST(Commutant, So3IsReal) {
  const auto c = commutant(make("so", {0, 3}));
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_EQ(c.type, SchurType::Real);
}

TEST(Commutant, RealifiedComplexContainsJ) {
  const auto r = make("so_complex", {2});
  const auto c = commutant(r);
  EXPECT_GE(c.dim(), 2u);
  std::vector<Vec> flat;
  for (const auto& m : c.basis) flat.push_back(m.flat());
  EXPECT_TRUE(Subspace::span(flat, 16).contains(realified_j(2, 0).flat()));
}

TEST(Commutant, Sp1IsQuaternionic) {
  const auto c = commutant(make("sp_pq", {1, 0}));
  EXPECT_EQ(c.dim(), 4u);
  EXPECT_EQ(c.type, SchurType::Quaternionic);
}

TEST(Quaternion, Units) {
  EXPECT_EQ(quat_mul(kQuatI, kQuatJ), kQuatK);
  EXPECT_EQ(quat_mul(kQuatJ, kQuatI), (Quat{0, 0, 0, -1}));
  EXPECT_EQ(quat_left(kQuatI), (Mat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
  const auto q = QuaternionicStructure::on(1, 1);
  EXPECT_EQ(q.j1 * q.j2, q.j3);
  EXPECT_EQ(q.j1 * q.j1, Rat(-1) * Mat::identity(8));
}

}  // namespace
}  // namespace shl
