#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "shl/super_space.hpp"

namespace shl {

// Index set for bilinear maps R(e_a, e_b) stored on canonical pairs.
//
// Super-antisymmetric layout (curvature tensors): pairs a < b of any
// parity plus (a, a) for odd a; R(e_b, e_a) = -(-1)^{|a||b|} R(e_a, e_b).
// Symmetric layout (skew curvature tensors on an even space): pairs a <= b.
class PairLayout {
 public:
  enum class Symmetry { SuperAntisymmetric, Symmetric };

  struct Slot {
    std::size_t index = 0;
    int sign = 0;  // 0 means the value is identically zero
  };

  static PairLayout super_antisymmetric(const SuperSpace& v);
  static PairLayout symmetric(std::size_t n);

  Symmetry symmetry() const { return symmetry_; }
  std::size_t dim() const { return parity_.size(); }
  std::size_t size() const { return pairs_.size(); }
  std::pair<std::size_t, std::size_t> pair(std::size_t p) const { return pairs_[p]; }
  Parity parity(std::size_t a) const { return parity_[a]; }
  Parity pair_parity(std::size_t p) const { return parity_[pairs_[p].first] + parity_[pairs_[p].second]; }
  const Slot& lookup(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

 private:
  Symmetry symmetry_ = Symmetry::SuperAntisymmetric;
  std::vector<Parity> parity_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<Slot> table_;
};

}  // namespace shl
