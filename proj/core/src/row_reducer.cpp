#include "shl/row_reducer.hpp"

#include "shl/error.hpp"

namespace shl {

SparseRow to_sparse(const Vec& dense) {
  SparseRow row;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (sgn(dense[j]) != 0) row.emplace_back(j, dense[j]);
  return row;
}

Vec to_dense(const SparseRow& row, std::size_t cols) {
  Vec v(cols);
  for (const auto& [j, x] : row) v[j] = x;
  return v;
}

namespace {

const Rat* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// a - f * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rat& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RowReducer::RowReducer(std::size_t cols) : cols_(cols) {}

SparseRow RowReducer::reduce(const SparseRow& row) const {
  SparseRow out = row;
  // Pivot rows vanish on every other pivot column, so the coefficients can be
  // read off the incoming row once.
  for (const auto& [col, val] : row) {
    auto it = rows_.find(col);
    if (it == rows_.end()) continue;
    Rat f = val;
    out = axpy(out, f, it->second);
  }
  return out;
}

bool RowReducer::add(const SparseRow& row) {
  for (const auto& e : row)
    if (e.first >= cols_) throw InputError("row entry outside the column range");
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().first;
  Rat lead = r.front().second;
  for (auto& e : r) e.second /= lead;
  for (auto& [p, other] : rows_) {
    if (const Rat* x = find_entry(other, pivot)) {
      Rat f = *x;
      other = axpy(other, f, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool RowReducer::add(const Vec& dense) {
  if (dense.size() != cols_) throw InputError("row length mismatch");
  return add(to_sparse(dense));
}

bool RowReducer::contains(const Vec& dense) const {
  if (dense.size() != cols_) throw InputError("vector length mismatch");
  return reduce(to_sparse(dense)).empty();
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& kv : rows_) p.push_back(kv.first);
  return p;
}

Mat RowReducer::basis() const {
  Mat m(rows_.size(), cols_);
  std::size_t i = 0;
  for (const auto& kv : rows_) {
    for (const auto& [j, x] : kv.second) m(i, j) = x;
    ++i;
  }
  return m;
}

Mat RowReducer::kernel() const {
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!rows_.count(j)) free.push_back(j);
  // x_f = 1, x_p = -row_p[f]. Ordering these by free column and reading them
  // bottom-up would already be echelon; pushing them through a reducer is the
  // simplest way to land on the canonical RREF.
  RowReducer k(cols_);
  for (std::size_t f : free) {
    SparseRow v;
    for (const auto& [p, row] : rows_)
      if (const Rat* x = find_entry(row, f)) v.emplace_back(p, -*x);
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    k.add(v);
  }
  return k.basis();
}

}  // namespace shl
