#pragma once

// Deliberately naive dense systems over all ordered index pairs, solved with
// a textbook elimination. Shares nothing with the library except the input
// matrices, so it can serve as an oracle for the kernel computations.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;

struct Input {
  std::size_t d0 = 0, d1 = 0;
  Matrix gram;                    // empty if there is no form
  std::vector<Matrix> gens;       // d x d each
  std::vector<int> gen_parity;    // 0 or 1
};

std::size_t rank(Matrix rows);

// dim R(g) summed over both parities: R(b,a) = -(-1)^{|a||b|} R(a,b) and
// (-1)^{|x||z|} R(x,y)z + (-1)^{|y||x|} R(y,z)x + (-1)^{|z||y|} R(z,x)y = 0.
std::size_t curvature_dim(const Input& in);
// dim R-bar(g) for an even space: symmetric R with the ordinary cyclic sum.
std::size_t rbar_dim(const Input& in);
// phi(x)y = +-phi(y)x for an even space.
std::size_t prolongation_dim(const Input& in, bool symmetric);
// gram(P(x)y,z) + gram(P(y)z,x) + gram(P(z)x,y) = 0 for an even space.
std::size_t weak_dim(const Input& in);

}  // namespace oracle
