#include "shl/pair_layout.hpp"

namespace shl {

PairLayout PairLayout::super_antisymmetric(const SuperSpace& v) {
  PairLayout l;
  const std::size_t n = v.dim();
  l.symmetry_ = Symmetry::SuperAntisymmetric;
  for (std::size_t a = 0; a < n; ++a) l.parity_.push_back(v.parity(a));
  l.table_.resize(n * n);
  // Even-even pairs, then even-odd, then odd-odd; lexicographic inside each.
  for (int cls = 0; cls < 3; ++cls)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (bit(v.parity(a)) + bit(v.parity(b)) != cls) continue;
        if (a == b && v.parity(a) == Parity::Even) continue;
        const std::size_t idx = l.pairs_.size();
        l.pairs_.emplace_back(a, b);
        l.table_[a * n + b] = Slot{idx, 1};
        if (a != b) l.table_[b * n + a] = Slot{idx, -koszul(bit(v.parity(a)) * bit(v.parity(b)))};
      }
  return l;
}

PairLayout PairLayout::symmetric(std::size_t n) {
  PairLayout l;
  l.symmetry_ = Symmetry::Symmetric;
  l.parity_.assign(n, Parity::Even);
  l.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t idx = l.pairs_.size();
      l.pairs_.emplace_back(a, b);
      l.table_[a * n + b] = Slot{idx, 1};
      l.table_[b * n + a] = Slot{idx, 1};
    }
  return l;
}

}  // namespace shl
