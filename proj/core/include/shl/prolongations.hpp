#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shl/curvature.hpp"

namespace shl {

enum class ProlongKind {
  Sym,    // g^(1):  phi(x)y =  phi(y)x
  Skew,   // g^[1]:  phi(x)y = -phi(y)x
  Eta,    // P_eta:  eta(P(X)Y,Z) + eta(P(Y)Z,X) + eta(P(Z)X,Y) = 0
  Omega,  // P_omega: the same cyclic identity with the symplectic form
};
const char* to_string(ProlongKind k);

// Subspace of V* (x) g for an ungraded g in gl(V); coordinates
// c[i * n + k] with phi(e_i) = sum_k c[i*n+k] b_k.
struct ProlongSpace {
  RepPtr rep;
  ProlongKind kind = ProlongKind::Sym;
  Subspace basis;
  std::size_t dim() const { return basis.dim(); }
  // phi(e_i) for the j-th basis element.
  Mat value(std::size_t j, std::size_t i) const;
  // Basis re-expressed in V* (x) gl(V), coordinates i * d*d + (row * d + col).
  Subspace in_endomorphisms() const;
};

struct ProlongOptions {
  // Restrict to phi with phi(Jx) = J phi(x) (complex-linear maps into a
  // complex algebra); J must preserve g under left multiplication.
  std::optional<Mat> complex_structure;
  std::size_t max_size = 0;
};

ProlongSpace first_prolongation(const RepPtr& rep, bool symmetric, const ProlongOptions& opts = {});
ProlongSpace weak_curvature(const RepPtr& rep, ProlongKind kind, const ProlongOptions& opts = {});

enum class SchurType { Real, Complex, Quaternionic, Reducible };
const char* to_string(SchurType t);

struct Commutant {
  std::vector<Mat> basis;
  std::size_t dim() const { return basis.size(); }
  SchurType type = SchurType::Reducible;
};
// Even endomorphisms supercommuting with every generator.
Commutant commutant(const SuperRep& rep);

struct WeakBergerVerdict {
  bool weak_berger = false;
  Subspace images;
  std::size_t dim = 0;
};
// span{P(X)} = g for P in P_eta / P_omega; the zero algebra is never weak-Berger.
WeakBergerVerdict weak_berger(const ProlongSpace& p);

}  // namespace shl
