#include "shl/super_space.hpp"

#include <sstream>

#include "shl/error.hpp"

namespace shl {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::None: return "none";
    case FormKind::Ortho: return "ortho";
    case FormKind::SkewOrtho: return "skew-ortho";
  }
  return "?";
}

Mat canonical_omega(std::size_t d1) {
  if (d1 % 2) throw InputError("symplectic block needs even dimension, got " + std::to_string(d1));
  const std::size_t m = d1 / 2;
  Mat w(d1, d1);
  // xi_{-a} sits at m - a, xi_a at m + a - 1.
  for (std::size_t a = 1; a <= m; ++a) {
    w(m + a - 1, m - a) = 1;
    w(m - a, m + a - 1) = -1;
  }
  return w;
}

std::pair<std::size_t, std::size_t> inertia(const Mat& symmetric) {
  if (!symmetric.is_symmetric()) throw InputError("inertia of a non-symmetric matrix");
  Mat a = symmetric;
  const std::size_t n = a.rows();
  std::size_t neg = 0, pos = 0;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (sgn(a(i, i)) != 0) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw InputError("degenerate symmetric form");
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    swap_index(k, piv);
    (sgn(a(k, k)) < 0 ? neg : pos)++;
    // Schur complement; row and column k are left untouched until the end.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      Rat f = a(r, k) / a(k, k);
      for (std::size_t c = k + 1; c < n; ++c)
        if (sgn(a(k, c)) != 0) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
  }
  return {neg, pos};
}

SuperSpace SuperSpace::canonical(std::size_t p, std::size_t q, std::size_t d1) {
  Mat eta(p + q, p + q);
  for (std::size_t i = 0; i < p + q; ++i) eta(i, i) = i < p ? -1 : 1;
  return with_form(FormKind::Ortho, std::move(eta), canonical_omega(d1));
}

SuperSpace SuperSpace::bare(std::size_t d0, std::size_t d1) {
  SuperSpace s;
  s.d0_ = d0;
  s.d1_ = d1;
  return s;
}

SuperSpace SuperSpace::with_form(FormKind kind, Mat ge, Mat go) {
  if (kind == FormKind::None) return bare(ge.rows(), go.rows());
  if (!ge.square() || !go.square()) throw InputError("Gram blocks must be square");
  const bool ortho = kind == FormKind::Ortho;
  if (ortho ? !ge.is_symmetric() : !ge.is_skew())
    throw InputError(std::string("even Gram block must be ") + (ortho ? "symmetric" : "skew"));
  if (ortho ? !go.is_skew() : !go.is_symmetric())
    throw InputError(std::string("odd Gram block must be ") + (ortho ? "skew" : "symmetric"));
  if (ge.rows() && sgn(determinant(ge)) == 0) throw InputError("even Gram block is singular");
  if (go.rows() && sgn(determinant(go)) == 0) throw InputError("odd Gram block is singular");
  SuperSpace s;
  s.d0_ = ge.rows();
  s.d1_ = go.rows();
  s.kind_ = kind;
  s.gram_ = Mat(s.d0_ + s.d1_, s.d0_ + s.d1_);
  s.gram_.set_block(0, 0, ge);
  s.gram_.set_block(s.d0_, s.d0_, go);
  s.gram_even_ = std::move(ge);
  s.gram_odd_ = std::move(go);
  return s;
}

Mat SuperSpace::gram() const {
  if (!has_form()) throw InputError("space carries no bilinear form");
  return gram_;
}

Rat SuperSpace::form(const Vec& x, const Vec& y) const {
  if (!has_form()) throw InputError("space carries no bilinear form");
  Rat s;
  Vec gy = gram_.apply(y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) s += x[i] * gy[i];
  return s;
}

std::pair<std::size_t, std::size_t> SuperSpace::signature() const {
  if (kind_ == FormKind::Ortho) return inertia(gram_even_);
  if (kind_ == FormKind::SkewOrtho) return inertia(gram_odd_);
  return {0, 0};
}

bool SuperSpace::is_canonical() const {
  if (kind_ != FormKind::Ortho) return false;
  auto [p, q] = signature();
  return *this == canonical(p, q, d1_);
}

std::string SuperSpace::label() const {
  std::ostringstream os;
  if (kind_ == FormKind::Ortho) {
    auto [p, q] = signature();
    os << "R^{" << p << ',' << q << '|' << d1_ << '}';
  } else {
    os << "R^{" << d0_ << '|' << d1_ << '}';
  }
  return os.str();
}

}  // namespace shl
