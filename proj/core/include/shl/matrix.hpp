#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "shl/rational.hpp"

namespace shl {

// Dense row-major matrix over Q. Products skip zero entries, which matters
// because almost every matrix built here is a sparse sign pattern.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  // Row-major flattening, used to treat matrices as vectors in gl(V).
  const Vec& flat() const { return data_; }
  static Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  Rat trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// Determinant by fraction-free elimination on a copy.
Rat determinant(const Mat& m);

}  // namespace shl
