#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "shl/super_space.hpp"

namespace shl {

// A parity-homogeneous endomorphism of a super space: even endomorphisms are
// block diagonal, odd ones block off-diagonal.
struct SuperEndo {
  std::size_t d0 = 0;
  Parity parity = Parity::Even;
  Mat m;

  std::size_t dim() const { return m.rows(); }
};

// Parity of m with respect to the split (d0, n - d0); nullopt if m mixes
// both. The zero matrix counts as even.
std::optional<Parity> homogeneous_parity(const Mat& m, std::size_t d0);
SuperEndo make_endo(const SuperSpace& v, Mat m, Parity parity);
SuperEndo make_endo(const SuperSpace& v, Mat m);
// Splits an arbitrary endomorphism into its even and odd parts.
std::pair<Mat, Mat> split_parity(const Mat& m, std::size_t d0);

// [a, b] = ab - (-1)^{|a||b|} ba
SuperEndo supercommutator(const SuperEndo& a, const SuperEndo& b);
Mat supercommutator(const Mat& a, Parity pa, const Mat& b, Parity pb);

// g(aX, Y) + (-1)^{|a||X|} g(X, aY) = 0 on all basis pairs. On failure the
// offending (i, j) pair is returned.
std::optional<std::pair<std::size_t, std::size_t>> osp_violation(const SuperSpace& v, const Mat& a,
                                                                  Parity pa);
inline bool osp_check(const SuperSpace& v, const SuperEndo& a) {
  return !osp_violation(v, a.m, a.parity);
}

// (X ^ Y) Z = (-1)^{|Y||Z|} g(X,Z) Y - (-1)^{(|Y|+|Z|)|X|} g(Y,Z) X
// for homogeneous X, Y given in coordinates.
SuperEndo wedge(const SuperSpace& v, const Vec& x, const Vec& y);
SuperEndo wedge(const SuperSpace& v, std::size_t i, std::size_t j);
// (xi <> delta) theta = omega(xi,theta) delta + omega(delta,theta) xi, for odd xi, delta.
SuperEndo diamond(const SuperSpace& v, const Vec& xi, const Vec& delta);

// Supertranspose, fixed so that (ab)^st = (-1)^{|a||b|} b^st a^st:
//   (a^st)_{ij} = (-1)^{(|i|+|j|)(|a|+|i|)} a_{ji}
Mat supertranspose(const Mat& a, Parity pa, std::size_t d0);

Vec basis_vector(std::size_t n, std::size_t i);
Parity vector_parity(const SuperSpace& v, const Vec& x);

}  // namespace shl
