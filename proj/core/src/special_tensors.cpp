#include "shl/curvature.hpp"
#include "shl/error.hpp"

namespace shl {

Tensor2 quaternionic_curvature(const RepPtr& rep, const QuaternionicStructure& js) {
  const SuperSpace& v = rep->space();
  const std::size_t d = v.dim();
  const std::array<const Mat*, 3> j{&js.j1, &js.j2, &js.j3};
  for (const Mat* ja : j) {
    if (ja->rows() != d || ja->cols() != d) throw InputError("quaternionic structure has the wrong size");
    if (!(*ja * *ja == Mat::identity(d) * Rat(-1))) throw InputError("J_a^2 != -1");
    if (homogeneous_parity(*ja, v.d0()) != Parity::Even) throw InputError("J_a must be even");
    if (!(ja->transpose() * v.gram() * *ja == v.gram())) throw InputError("J_a does not preserve the form");
  }
  if (!(js.j1 * js.j2 == js.j3)) throw InputError("J1 J2 != J3");

  auto layout = std::make_shared<const PairLayout>(PairLayout::super_antisymmetric(v));
  const Rat half(1, 2), quarter(1, 4);
  return tensor_from_values(rep, layout, Parity::Even, [&](std::size_t a, std::size_t b) {
    Mat out = wedge(v, a, b).m * quarter;
    for (const Mat* ja : j) {
      const Vec x = ja->col(a), y = ja->col(b);
      out += wedge(v, x, y).m * quarter;
      out -= *ja * (half * v.form(basis_vector(d, a), y));
    }
    return out;
  });
}

RtauParts rtau_parts(const SuperSpace& v1, const SuperSpace& v2, const Tau& tau, std::size_t x1,
                     std::size_t x2, std::size_t u1, std::size_t u2) {
  if (v2.d1() != 0) throw InputError("R_tau needs a purely even second factor");
  const int px = bit(v1.parity(x1)), pu = bit(v1.parity(u1));
  RtauParts out{Mat(v1.dim(), v1.dim()), Mat(v2.dim(), v2.dim())};
  for (std::size_t w = 0; w < v1.dim(); ++w) {
    const int pw = bit(v1.parity(w));
    out.a(u1, w) += koszul(pw * pu) * tau(x1, x2, w, u2);
    out.a(x1, w) -= koszul((pw + pu) * px) * tau(u1, u2, w, x2);
  }
  for (std::size_t w = 0; w < v2.dim(); ++w) {
    out.b(u2, w) += tau(x1, x2, u1, w);
    out.b(x2, w) -= koszul(pu * px) * tau(u1, u2, x1, w);
  }
  return out;
}

Tensor2 rtau_curvature(const RepPtr& product, const SuperSpace& v1, const SuperSpace& v2, const Tau& tau) {
  const SuperSpace& v = product->space();
  if (v.dim() != v1.dim() * v2.dim() || v.d0() != v1.d0() * v2.dim())
    throw InputError("R_tau: product space does not match the factors");
  const auto idx = tensor_index(v1, v2);
  std::vector<std::pair<std::size_t, std::size_t>> inv(v.dim());
  for (std::size_t i = 0; i < v1.dim(); ++i)
    for (std::size_t j = 0; j < v2.dim(); ++j) inv[idx[i][j]] = {i, j};

  auto layout = std::make_shared<const PairLayout>(PairLayout::super_antisymmetric(v));
  return tensor_from_values(product, layout, Parity::Even, [&](std::size_t a, std::size_t b) {
    auto [x1, x2] = inv[a];
    auto [u1, u2] = inv[b];
    const RtauParts p = rtau_parts(v1, v2, tau, x1, x2, u1, u2);
    const int pb = bit(v1.parity(x1)) + bit(v1.parity(u1));
    Mat m(v.dim(), v.dim());
    for (std::size_t w1 = 0; w1 < v1.dim(); ++w1)
      for (std::size_t w2 = 0; w2 < v2.dim(); ++w2) {
        const std::size_t col = idx[w1][w2];
        for (std::size_t r = 0; r < v1.dim(); ++r)
          if (sgn(p.a(r, w1)) != 0) m(idx[r][w2], col) += p.a(r, w1);
        const int s = koszul(pb * bit(v1.parity(w1)));
        for (std::size_t r = 0; r < v2.dim(); ++r)
          if (sgn(p.b(r, w2)) != 0) m(idx[w1][r], col) += s * p.b(r, w2);
      }
    return m;
  });
}

}  // namespace shl
