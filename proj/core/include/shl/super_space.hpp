#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "shl/matrix.hpp"

namespace shl {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }
// (-1)^e
inline int koszul(int e) { return (e & 1) ? -1 : 1; }
const char* to_string(Parity p);

// Which symmetry the even-even and odd-odd blocks of the form carry.
//   Ortho:     even block symmetric, odd block skew (the osp(p,q|2m) case)
//   SkewOrtho: even block skew, odd block symmetric (parity shift of Ortho)
enum class FormKind : std::uint8_t { None, Ortho, SkewOrtho };
const char* to_string(FormKind k);

// Z/2-graded real vector space V = V0 + V1 with basis ordered even first,
// optionally carrying an even nondegenerate bilinear form g = gram_even + gram_odd.
class SuperSpace {
 public:
  SuperSpace() = default;

  // R^{p,q|d1}: eta = diag(-1 x p, +1 x q); omega on xi_{-m}..xi_{-1}, xi_1..xi_m
  // with omega(xi_a, xi_{-a}) = 1 for a > 0.
  static SuperSpace canonical(std::size_t p, std::size_t q, std::size_t d1);
  static SuperSpace bare(std::size_t d0, std::size_t d1);
  // Validates symmetry type and invertibility for the requested kind.
  static SuperSpace with_form(FormKind kind, Mat gram_even, Mat gram_odd);

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t dim() const { return d0_ + d1_; }
  Parity parity(std::size_t i) const { return i < d0_ ? Parity::Even : Parity::Odd; }

  FormKind kind() const { return kind_; }
  bool has_form() const { return kind_ != FormKind::None; }
  const Mat& gram_even() const { return gram_even_; }
  const Mat& gram_odd() const { return gram_odd_; }
  // Full d x d Gram matrix, block diagonal.
  Mat gram() const;
  Rat form(const Vec& x, const Vec& y) const;
  const Rat& form(std::size_t i, std::size_t j) const { return gram_(i, j); }

  // (p, q) for canonical spaces, otherwise the inertia of the symmetric block.
  std::pair<std::size_t, std::size_t> signature() const;
  bool is_canonical() const;

  SuperSpace without_form() const { return bare(d0_, d1_); }
  std::string label() const;

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.kind_ == b.kind_ && a.gram_ == b.gram_;
  }

 private:
  std::size_t d0_ = 0;
  std::size_t d1_ = 0;
  FormKind kind_ = FormKind::None;
  Mat gram_even_;
  Mat gram_odd_;
  Mat gram_;
};

Mat canonical_omega(std::size_t d1);
// Numbers of negative and positive eigenvalues of a symmetric matrix, via a
// congruence diagonalization. Throws if the matrix is degenerate.
std::pair<std::size_t, std::size_t> inertia(const Mat& symmetric);

}  // namespace shl
