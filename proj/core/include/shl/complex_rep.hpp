#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shl/super_rep.hpp"

namespace shl {

struct CMat {
  Mat re, im;
};

// A complex Lie superalgebra acting on C^{d0|d1} with an optional complex
// bilinear (not sesquilinear) form. Matrices are split into real and
// imaginary parts.
struct ComplexRep {
  std::string name;
  std::size_t d0 = 0, d1 = 0;
  FormKind kind = FormKind::None;
  CMat gram;
  std::vector<std::pair<CMat, Parity>> gens;
};

// A rational representation regarded over C.
ComplexRep complexify(const SuperRep& r);

// Realification. Each parity block C^n becomes R^{2n} with coordinates
// (Re z_1..Re z_n, Im z_1..Im z_n); the form becomes Re of the complex form;
// generators are X and iX for every complex generator X.
SuperRep realify(const ComplexRep& c);
Mat realify_matrix(const CMat& m, std::size_t d0, std::size_t d1);
// Multiplication by i on the realified space.
Mat realified_j(std::size_t d0, std::size_t d1);

}  // namespace shl
