#pragma once

#include <ostream>
#include <random>
#include <string>

#include "oracle/naive.hpp"
#include "shl/catalog.hpp"
#include "shl/curvature.hpp"
#include "shl/linalg.hpp"

namespace shl {
// Readable gtest failure messages.
inline void PrintTo(const Mat& m, std::ostream* os) { *os << "\n" << m.str(); }
}  // namespace shl

namespace shl::test {

inline RepPtr rep(const std::string& spec, std::size_t max_size = 32) {
  return share(make(AlgebraSpec::parse(spec), max_size));
}

inline oracle::Input to_input(const SuperRep& r) {
  oracle::Input in;
  in.d0 = r.space().d0();
  in.d1 = r.space().d1();
  const std::size_t d = r.space().dim();
  auto copy = [d](const Mat& m) {
    oracle::Matrix out(d, std::vector<oracle::Q>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i][j] = m(i, j);
    return out;
  };
  if (r.space().has_form()) in.gram = copy(r.space().gram());
  for (std::size_t k = 0; k < r.size(); ++k) {
    in.gens.push_back(copy(r.gen(k)));
    in.gen_parity.push_back(bit(r.parity(k)));
  }
  return in;
}

inline Rat random_rat(std::mt19937& rng, int span = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = random_rat(rng);
  return m;
}

// Basis of the center of g in generator coordinates.
inline std::vector<Vec> center_of(const SuperRep& r) {
  const std::size_t n = r.size();
  Mat m(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Vec b = r.bracket_coords(k, l);
      for (std::size_t c = 0; c < n; ++c) m(l * n + c, k) = b[c];
    }
  const Mat kernel = nullspace(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < kernel.rows(); ++i) out.push_back(kernel.row(i));
  return out;
}

// Random element of g with the given parity.
inline Mat random_element(std::mt19937& rng, const SuperRep& r, Parity p) {
  const std::size_t d = r.space().dim();
  Mat out(d, d);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (r.parity(k) == p) out += random_rat(rng) * r.gen(k);
  return out;
}

}  // namespace shl::test
