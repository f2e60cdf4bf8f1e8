#pragma once

#include <array>
#include <cstddef>

#include "shl/matrix.hpp"

namespace shl {

// Quaternions are realized on R^4 with basis (1, i, j, k). A quaternionic
// n x m matrix A acts on column vectors from the left and becomes the real
// 4n x 4m matrix of blocks L(A_rs), where L(q) is left multiplication by q.
// Scalars act from the right, so quaternionic linearity means commuting with
// the right multiplications R(i), R(j), R(k).
//
// Worked example: L(i) sends 1 -> i, i -> -1, j -> k, k -> -j, so
//   L(i) = [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]
// and L(conj q) = L(q)^T, hence the quaternionic conjugate transpose of A is
// the ordinary transpose of its real image.
using Quat = std::array<long, 4>;

Quat quat_mul(const Quat& p, const Quat& q);
Mat quat_left(const Quat& q);
Mat quat_right(const Quat& q);

inline constexpr Quat kQuatOne{1, 0, 0, 0};
inline constexpr Quat kQuatI{0, 1, 0, 0};
inline constexpr Quat kQuatJ{0, 0, 1, 0};
inline constexpr Quat kQuatK{0, 0, 0, 1};
inline constexpr std::array<Quat, 4> kQuatUnits{kQuatOne, kQuatI, kQuatJ, kQuatK};

// Real image of the quaternionic n x m matrix with a single entry q at (r, c).
Mat quat_unit_matrix(std::size_t n, std::size_t m, std::size_t r, std::size_t c, const Quat& q);

// Gram matrix on H^k of omega(x, y) = sum Re(conj(x_l) i y_l): skew,
// nondegenerate and invariant under right multiplication by unit quaternions.
Mat quat_symplectic_gram(std::size_t k);

// Right multiplications by i, j and their product, acting blockwise on
// H^{n0} + H^{n1} (real dims 4 n0 | 4 n1). J1 J2 = J3 and Ja^2 = -1.
struct QuaternionicStructure {
  Mat j1, j2, j3;
  static QuaternionicStructure on(std::size_t n0, std::size_t n1);
};

}  // namespace shl
