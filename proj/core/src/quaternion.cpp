#include "shl/quaternion.hpp"

namespace shl {

Quat quat_mul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Mat quat_left(const Quat& q) {
  Mat m(4, 4);
  for (std::size_t b = 0; b < 4; ++b) {
    Quat col = quat_mul(q, kQuatUnits[b]);
    for (std::size_t a = 0; a < 4; ++a) m(a, b) = col[a];
  }
  return m;
}

Mat quat_right(const Quat& q) {
  Mat m(4, 4);
  for (std::size_t b = 0; b < 4; ++b) {
    Quat col = quat_mul(kQuatUnits[b], q);
    for (std::size_t a = 0; a < 4; ++a) m(a, b) = col[a];
  }
  return m;
}

Mat quat_unit_matrix(std::size_t n, std::size_t m, std::size_t r, std::size_t c, const Quat& q) {
  Mat out(4 * n, 4 * m);
  out.set_block(4 * r, 4 * c, quat_left(q));
  return out;
}

Mat quat_symplectic_gram(std::size_t k) {
  Mat w(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Quat ea = kQuatUnits[a];
      Quat conj{ea[0], -ea[1], -ea[2], -ea[3]};
      w(a, b) = quat_mul(quat_mul(conj, kQuatI), kQuatUnits[b])[0];
    }
  Mat g(4 * k, 4 * k);
  for (std::size_t l = 0; l < k; ++l) g.set_block(4 * l, 4 * l, w);
  return g;
}

QuaternionicStructure QuaternionicStructure::on(std::size_t n0, std::size_t n1) {
  const std::size_t n = 4 * (n0 + n1);
  QuaternionicStructure s{Mat(n, n), Mat(n, n), Mat(n, n)};
  const Mat ri = quat_right(kQuatI), rj = quat_right(kQuatJ);
  for (std::size_t b = 0; b < n0 + n1; ++b) {
    s.j1.set_block(4 * b, 4 * b, ri);
    s.j2.set_block(4 * b, 4 * b, rj);
  }
  s.j3 = s.j1 * s.j2;
  return s;
}

}  // namespace shl
