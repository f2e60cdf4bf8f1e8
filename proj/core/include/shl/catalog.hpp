#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shl/complex_rep.hpp"
#include "shl/quaternion.hpp"
#include "shl/super_rep.hpp"

namespace shl {

enum class CenterExtension { None, ComplexJ, QuaternionicSp1 };

// A catalog entry. Text grammar, loosest binding first:
//   spec   := spec "+R"                  identity adjoined (drops the form)
//           | prefix ":" spec            adjoint, complex, sym2, alt2, kahler
//           | spec "*" spec              tensor product
//           | "(" spec ")"
//           | family [":" p1,p2,...] ["+J" | "+sp1"]
// e.g. "osp:2,0,2", "hosp:1,0,1+sp1", "complex:(sp_real:1*so:0,3)",
// "sym2:sl_real:3+R".
struct AlgebraSpec {
  std::string family;
  std::vector<long> params;
  CenterExtension center = CenterExtension::None;
  std::vector<AlgebraSpec> inner;  // operands of composite families

  static AlgebraSpec parse(std::string_view text);
  std::string str() const;
  bool composite() const { return !inner.empty(); }
};

// Default size ceiling: SHL_MAX_SIZE if set, otherwise 16.
std::size_t default_max_size();
// Real dimension of V without building the representation.
std::size_t predicted_dim(const AlgebraSpec& spec);

std::vector<std::string> family_names();
SuperRep make(const AlgebraSpec& spec, std::size_t max_size);
SuperRep make(const AlgebraSpec& spec);
SuperRep make(std::string_view family, std::vector<long> params,
              CenterExtension center = CenterExtension::None);

// Adjoint representation on g = g0 + g1, with the Killing form
// str(ad x ad y) when it is nondegenerate, else str(xy) on the defining
// module, else no form.
SuperRep adjoint_rep(const SuperRep& r);

// Standard complex structure on R^{2p,2q}: pairs (e_{2i}, e_{2i+1}).
Mat pair_complex_structure(std::size_t pairs);
// Replaces the form of a purely even representation by the symplectic form
// omega(x, y) = g(Jx, y).
SuperRep kaehler_symplectic(const SuperRep& r, const Mat& j);

// The module structure H -> A H + H B^T on a subspace U of n x m matrices.
// Each action is a pair (A, B); either may be empty (meaning zero).
SuperRep matrix_module(std::string name, const std::vector<Mat>& basis_of_u,
                       const std::vector<std::pair<Mat, Mat>>& actions);
SuperRep sym_square(const SuperRep& r);
SuperRep alt_square(const SuperRep& r);

// Real images of quaternionic matrix spaces.
std::vector<Mat> sl_quat_basis(std::size_t n);
std::vector<Mat> quat_hermitian_basis(std::size_t n);
std::vector<Mat> quat_skew_hermitian_basis(std::size_t n);
std::vector<Mat> quat_matrix_basis(std::size_t n, std::size_t m);
// Realified complex Hermitian n x n matrices.
std::vector<Mat> complex_hermitian_basis(std::size_t n);

}  // namespace shl
