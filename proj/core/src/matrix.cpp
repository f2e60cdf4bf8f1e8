#include "shl/matrix.hpp"

#include <sstream>

#include "shl/error.hpp"

namespace shl {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw InputError("cannot unflatten: size mismatch");
  Mat m(rows, cols);
  m.data_ = v;
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("dimension mismatch in matrix-vector product");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& a = (*this)(i, j);
      if (sgn(a) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_skew() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Rat Mat::trace() const {
  Rat t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(o.data_[k]) != 0) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(o.data_[k]) != 0) data_[k] -= o.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw InputError("shape mismatch in *");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

Rat determinant(const Mat& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rat f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace shl
