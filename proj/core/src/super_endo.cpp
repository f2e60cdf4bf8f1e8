#include "shl/super_endo.hpp"

#include "shl/error.hpp"

namespace shl {

Vec basis_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Parity vector_parity(const SuperSpace& v, const Vec& x) {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) (i < v.d0() ? even : odd) = true;
  if (even && odd) throw InputError("vector is not parity-homogeneous");
  return odd ? Parity::Odd : Parity::Even;
}

std::optional<Parity> homogeneous_parity(const Mat& m, std::size_t d0) {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) (((i < d0) == (j < d0)) ? even : odd) = true;
  if (even && odd) return std::nullopt;
  return odd ? Parity::Odd : Parity::Even;
}

std::pair<Mat, Mat> split_parity(const Mat& m, std::size_t d0) {
  Mat e(m.rows(), m.cols()), o(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      (((i < d0) == (j < d0)) ? e : o)(i, j) = m(i, j);
  return {e, o};
}

SuperEndo make_endo(const SuperSpace& v, Mat m, Parity parity) {
  if (m.rows() != v.dim() || m.cols() != v.dim())
    throw InputError("endomorphism has wrong size for " + v.label());
  auto p = homogeneous_parity(m, v.d0());
  if (!p) throw InputError("endomorphism mixes parities");
  if (*p != parity && !m.is_zero()) throw InputError("endomorphism has the wrong parity");
  return SuperEndo{v.d0(), parity, std::move(m)};
}

SuperEndo make_endo(const SuperSpace& v, Mat m) {
  auto p = homogeneous_parity(m, v.d0());
  if (!p) throw InputError("endomorphism mixes parities");
  return make_endo(v, std::move(m), *p);
}

Mat supercommutator(const Mat& a, Parity pa, const Mat& b, Parity pb) {
  Mat ab = a * b;
  Mat ba = b * a;
  if (pa == Parity::Odd && pb == Parity::Odd) return ab + ba;
  return ab - ba;
}

SuperEndo supercommutator(const SuperEndo& a, const SuperEndo& b) {
  if (a.d0 != b.d0 || a.dim() != b.dim())
    throw InputError("supercommutator of endomorphisms of different spaces");
  return SuperEndo{a.d0, a.parity + b.parity, supercommutator(a.m, a.parity, b.m, b.parity)};
}

std::optional<std::pair<std::size_t, std::size_t>> osp_violation(const SuperSpace& v, const Mat& a,
                                                                  Parity pa) {
  const Mat g = v.gram();
  const Mat left = a.transpose() * g;  // g(a e_i, e_j)
  const Mat right = g * a;             // g(e_i, a e_j)
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      int s = koszul(bit(pa) * bit(v.parity(i)));
      Rat r = left(i, j) + s * right(i, j);
      if (sgn(r) != 0) return std::make_pair(i, j);
    }
  return std::nullopt;
}

SuperEndo wedge(const SuperSpace& v, const Vec& x, const Vec& y) {
  const Parity px = vector_parity(v, x), py = vector_parity(v, y);
  const std::size_t n = v.dim();
  const Vec gx = v.gram().transpose().apply(x);  // gx[k] = g(X, e_k)
  const Vec gy = v.gram().transpose().apply(y);
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const int pk = bit(v.parity(k));
    const int s1 = koszul(bit(py) * pk);
    const int s2 = koszul((bit(py) + pk) * bit(px));
    for (std::size_t r = 0; r < n; ++r) {
      Rat val;
      if (sgn(gx[k]) != 0 && sgn(y[r]) != 0) val += s1 * gx[k] * y[r];
      if (sgn(gy[k]) != 0 && sgn(x[r]) != 0) val -= s2 * gy[k] * x[r];
      m(r, k) = val;
    }
  }
  return SuperEndo{v.d0(), px + py, std::move(m)};
}

SuperEndo wedge(const SuperSpace& v, std::size_t i, std::size_t j) {
  return wedge(v, basis_vector(v.dim(), i), basis_vector(v.dim(), j));
}

SuperEndo diamond(const SuperSpace& v, const Vec& xi, const Vec& delta) {
  if (vector_parity(v, xi) != Parity::Odd || vector_parity(v, delta) != Parity::Odd)
    throw InputError("diamond takes two odd vectors");
  const std::size_t n = v.dim();
  const Vec gxi = v.gram().transpose().apply(xi);
  const Vec gde = v.gram().transpose().apply(delta);
  Mat m(n, n);
  for (std::size_t k = v.d0(); k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) m(r, k) = gxi[k] * delta[r] + gde[k] * xi[r];
  return SuperEndo{v.d0(), Parity::Even, std::move(m)};
}

Mat supertranspose(const Mat& a, Parity pa, std::size_t d0) {
  const std::size_t n = a.rows();
  Mat t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int pi = i < d0 ? 0 : 1, pj = j < d0 ? 0 : 1;
      t(i, j) = koszul((pi + pj) * (bit(pa) + pi)) * a(j, i);
    }
  return t;
}

}  // namespace shl
