#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shl/matrix.hpp"
#include "shl/row_reducer.hpp"

namespace shl {

struct RrefResult {
  Mat reduced;  // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
// Canonical basis of {x : m x = 0}, one basis vector per row.
Mat nullspace(const Mat& m);

// A linear subspace of Q^n stored by its canonical RREF basis, so that
// equality is plain matrix equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace span_rows(const Mat& rows);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Mat basis_;
};

// Solves for coordinates of matrices in the span of a fixed independent list.
class Coordinatizer {
 public:
  Coordinatizer() = default;
  // Throws InputError if the matrices are linearly dependent.
  Coordinatizer(const std::vector<Mat>& basis, std::size_t rows, std::size_t cols);

  std::size_t size() const { return n_; }
  std::optional<Vec> coords(const Mat& m) const;
  Mat combine(const Vec& coeffs) const;

 private:
  std::size_t n_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Mat> basis_;
  std::vector<std::size_t> pivot_;  // flattened column per reduced row
  std::vector<Vec> transform_;      // reduced row r = sum_j transform_[r][j] basis_[j]
};

}  // namespace shl
