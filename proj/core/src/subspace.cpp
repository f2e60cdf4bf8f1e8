#include "shl/linalg.hpp"

#include "shl/error.hpp"

namespace shl {

RrefResult rref(const Mat& m) {
  RowReducer r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) r.add(m.row(i));
  RrefResult out;
  out.rank = r.rank();
  out.pivots = r.pivots();
  out.reduced = Mat(m.rows(), m.cols());
  out.reduced.set_block(0, 0, r.basis());
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
  RowReducer r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) r.add(m.row(i));
  return r.kernel();
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  RowReducer r(ambient);
  for (const auto& v : vectors) r.add(v);
  Subspace s(ambient);
  s.basis_ = r.basis();
  return s;
}

Subspace Subspace::span_rows(const Mat& rows) {
  RowReducer r(rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i) r.add(rows.row(i));
  Subspace s(rows.cols());
  s.basis_ = r.basis();
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Mat::identity(ambient);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw InputError("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (sgn(basis_(i, p)) == 0) ++p;
    if (sgn(r[p]) == 0) continue;
    Rat f = r[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) r[j] -= f * basis_(i, j);
  }
  return shl::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("sum of subspaces of different spaces");
  RowReducer r(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) r.add(vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) r.add(other.vector(i));
  Subspace s(ambient_);
  s.basis_ = r.basis();
  return s;
}

Coordinatizer::Coordinatizer(const std::vector<Mat>& basis, std::size_t rows, std::size_t cols)
    : n_(basis.size()), rows_(rows), cols_(cols), basis_(basis) {
  if (basis.empty()) return;
  const std::size_t flat = rows_ * cols_;
  // Reduce [flat(b_j) | e_j]; the right half records how each reduced row is
  // assembled from the original basis.
  RowReducer r(flat + n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (basis[j].rows() != rows_ || basis[j].cols() != cols_)
      throw InputError("coordinatizer basis has mixed shapes");
    SparseRow row = to_sparse(basis[j].flat());
    row.emplace_back(flat + j, Rat(1));
    r.add(row);
  }
  Mat red = r.basis();
  for (std::size_t i = 0; i < red.rows(); ++i) {
    std::size_t p = 0;
    while (p < red.cols() && sgn(red(i, p)) == 0) ++p;
    if (p >= flat) throw InputError("generators are linearly dependent");
    pivot_.push_back(p);
    Vec t(n_);
    for (std::size_t j = 0; j < n_; ++j) t[j] = red(i, flat + j);
    transform_.push_back(std::move(t));
  }
  if (pivot_.size() != n_) throw InputError("generators are linearly dependent");
}

std::optional<Vec> Coordinatizer::coords(const Mat& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw InputError("matrix shape mismatch");
  Vec c(n_);
  const Vec& f = m.flat();
  for (std::size_t r = 0; r < pivot_.size(); ++r) {
    const Rat& x = f[pivot_[r]];
    if (sgn(x) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(transform_[r][j]) != 0) c[j] += x * transform_[r][j];
  }
  if (!(combine(c) == m)) return std::nullopt;
  return c;
}

Mat Coordinatizer::combine(const Vec& coeffs) const {
  Mat out(rows_, cols_);
  for (std::size_t j = 0; j < n_; ++j)
    if (sgn(coeffs[j]) != 0) out += basis_[j] * coeffs[j];
  return out;
}

}  // namespace shl
