#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "shl/catalog.hpp"
#include "shl/pair_layout.hpp"
#include "shl/super_rep.hpp"

namespace shl {

using RepPtr = std::shared_ptr<const SuperRep>;
inline RepPtr share(SuperRep r) { return std::make_shared<const SuperRep>(std::move(r)); }

// A homogeneous bilinear map V x V -> g stored on the canonical pairs of a
// layout: coords[p * n + k] is the k-th generator coordinate of R(pair p).
struct Tensor2 {
  RepPtr rep;
  std::shared_ptr<const PairLayout> layout;
  Parity parity = Parity::Even;
  Vec coords;

  Vec value_coords(std::size_t a, std::size_t b) const;
  Mat value(std::size_t a, std::size_t b) const;
  bool is_zero() const { return shl::is_zero(coords); }
};

enum class CurvKind { R, RBar };

// R(g) (super-antisymmetric, super Bianchi) or R-bar(g) (symmetric, ordinary
// Bianchi, even V), split by the parity of the tensor.
struct CurvSpace {
  RepPtr rep;
  std::shared_ptr<const PairLayout> layout;
  CurvKind kind = CurvKind::R;
  Subspace even, odd;

  std::size_t dim(Parity p) const { return p == Parity::Even ? even.dim() : odd.dim(); }
  const Subspace& part(Parity p) const { return p == Parity::Even ? even : odd; }
  Tensor2 tensor(Parity p, std::size_t i) const;
  std::vector<Tensor2> basis() const;
  bool contains(const Tensor2& t) const;
};

struct BianchiOptions {
  bool allow_formless = false;
  std::size_t max_size = 0;  // 0: default_max_size()
  bool parallel = true;
};

CurvSpace bianchi_kernel(const RepPtr& rep, const BianchiOptions& opts = {});
CurvSpace rbar_kernel(const RepPtr& rep, const BianchiOptions& opts = {});

// Super Bianchi (or the ordinary identity for R-bar) on every ordered triple
// of basis vectors, evaluated on actual matrices.
bool satisfies_bianchi(const Tensor2& t);
// g(R(X,Y)Z, W) = (-1)^{(|X|+|Y|)(|Z|+|W|)} g(R(Z,W)X, Y) on all basis quadruples.
bool pairing_symmetric(const Tensor2& t);

// L(R(g)): span of all values, in generator coordinates.
Subspace span_of_images(const CurvSpace& r);

struct BergerVerdict {
  bool berger = false;
  Subspace images;
  // Generators e_k not in L(R(g)) when the verdict is negative.
  std::vector<std::size_t> missing;
};
BergerVerdict is_berger(const CurvSpace& r);

// R^nabla(g): S in V* (x) R(g) with
// S_X(Y,Z) + (-1)^{|X|(|Y|+|Z|)} S_Y(Z,X) + (-1)^{|Z|(|X|+|Y|)} S_Z(X,Y) = 0.
// Coordinates: s[x * dim R(g) + r] over the combined (even then odd) basis.
struct SecondKernel {
  Subspace even, odd;
  std::size_t dim(Parity p) const { return p == Parity::Even ? even.dim() : odd.dim(); }
};
SecondKernel second_kernel(const CurvSpace& r);

// R_A(X,Y) = [A,R(X,Y)] - (-1)^{|A||R|} R(AX,Y) - (-1)^{|A|(|R|+|X|)} R(X,AY)
Tensor2 act_on_curvature(const Mat& a, Parity pa, const Tensor2& r);

// Builds a tensor from a matrix-valued function on canonical pairs; throws
// InputError if some value is not in g.
Tensor2 tensor_from_values(const RepPtr& rep, const std::shared_ptr<const PairLayout>& layout,
                           Parity parity, const std::function<Mat(std::size_t, std::size_t)>& value);

// Checks every block identity of a homogeneous R in R(g) on R^{p,q|2m} with
// d0, d1 > 0 and returns their names. Throws InternalError on any failure.
std::vector<std::string> block_decompose(const Tensor2& r);

// Quaternionic curvature tensor
// R(X,Y) = -1/2 sum g(X, J_a Y) J_a + 1/4 (X^Y + sum J_a X ^ J_a Y).
// With the wedge convention above, the J-term must pair X with J_a Y; the
// variant g(J_a X, Y) differs by a sign and violates Bianchi.
Tensor2 quaternionic_curvature(const RepPtr& rep, const QuaternionicStructure& js);

// R_tau on V = V1 (x) V2 (V2 purely even) built from tau(x1,x2,u1,u2); the
// value on (x1 (x) x2, u1 (x) u2) is A (x) 1 + 1 (x) B with
//   A v1 = (-1)^{|v1||u1|} tau(x1,x2,v1,u2) u1 - (-1)^{(|v1|+|u1|)|x1|} tau(u1,u2,v1,x2) x1
//   B v2 = tau(x1,x2,u1,v2) u2 - (-1)^{|u1||x1|} tau(u1,u2,x1,v2) x2
using Tau = std::function<Rat(std::size_t, std::size_t, std::size_t, std::size_t)>;
struct RtauParts {
  Mat a, b;
};
RtauParts rtau_parts(const SuperSpace& v1, const SuperSpace& v2, const Tau& tau, std::size_t x1,
                     std::size_t x2, std::size_t u1, std::size_t u2);
Tensor2 rtau_curvature(const RepPtr& product, const SuperSpace& v1, const SuperSpace& v2, const Tau& tau);

}  // namespace shl
