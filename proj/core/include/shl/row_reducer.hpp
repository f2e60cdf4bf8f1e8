#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "shl/matrix.hpp"

namespace shl {

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;  // sorted by column

// Incremental reduced row echelon form over sparse rows.
//
// Every stored row has a leading 1 at its pivot column and zeros in all other
// pivot columns, so the stored set is always the unique RREF of the rows seen
// so far. Reducing an incoming row is then a single pass over its pivot
// entries; a new pivot is back-substituted into the existing rows.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when the row was independent of the rows seen so far.
  bool add(const SparseRow& row);
  bool add(const Vec& dense);

  // Residual of `row` after reduction; empty means it lies in the row space.
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const Vec& dense) const;

  std::vector<std::size_t> pivots() const;
  // Nonzero rows of the RREF, ordered by pivot.
  Mat basis() const;
  // Canonical (RREF) basis of the right kernel {x : A x = 0}.
  Mat kernel() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row
};

SparseRow to_sparse(const Vec& dense);
Vec to_dense(const SparseRow& row, std::size_t cols);

}  // namespace shl
