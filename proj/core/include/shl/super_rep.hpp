#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shl/linalg.hpp"
#include "shl/super_endo.hpp"

namespace shl {

// A Lie superalgebra g given by a basis of homogeneous endomorphisms of a
// super space V. Even generators come first, then odd ones, each block in the
// order supplied. Construction checks independence, closure under the
// supercommutator and, when V has a form, invariance of the form.
class SuperRep {
 public:
  struct Options {
    bool check_form = true;
    bool check_closure = true;
  };

  SuperRep() = default;
  static SuperRep make(std::string name, SuperSpace space, std::vector<SuperEndo> gens);
  static SuperRep make(std::string name, SuperSpace space, std::vector<SuperEndo> gens,
                       Options opts);
  // Accepts any (possibly dependent) list of homogeneous matrices and keeps a
  // canonical basis of their span.
  static SuperRep from_span(std::string name, SuperSpace space, const std::vector<Mat>& mats,
                            Options opts);
  static SuperRep from_span(std::string name, SuperSpace space, const std::vector<Mat>& mats);

  const std::string& name() const { return name_; }
  const SuperSpace& space() const { return space_; }
  std::size_t size() const { return gens_.size(); }
  std::size_t even_count() const { return n_even_; }
  std::size_t odd_count() const { return gens_.size() - n_even_; }
  const SuperEndo& generator(std::size_t k) const { return gens_[k]; }
  const std::vector<SuperEndo>& generators() const { return gens_; }
  const Mat& gen(std::size_t k) const { return gens_[k].m; }
  Parity parity(std::size_t k) const { return gens_[k].parity; }

  // Coordinates of m in the generator basis, or nullopt if m is not in g.
  std::optional<Vec> coords(const Mat& m) const;
  Mat combine(const Vec& coeffs) const;
  bool contains(const Mat& m) const { return coords(m).has_value(); }

  // Structure constants: coords of [b_i, b_j].
  Vec bracket_coords(std::size_t i, std::size_t j) const;

  SuperRep renamed(std::string name) const;

 private:
  std::string name_;
  SuperSpace space_;
  std::vector<SuperEndo> gens_;
  std::size_t n_even_ = 0;
  std::shared_ptr<const Coordinatizer> coord_;
};

// Full orthosymplectic algebra of a space with a form, spanned by wedges of
// basis pairs.
SuperRep osp_algebra(const SuperSpace& v, std::string name);
// Elements of osp(V) (or gl(V) when with_form is false) supercommuting with
// every operator in `ops`; the operators must be even.
SuperRep centralizer(const SuperSpace& v, const std::vector<Mat>& ops, std::string name,
                     bool within_osp = true);

// g1 + g2 acting on V1 (x) V2 with Koszul signs:
//   (a (x) 1)(v (x) w) = av (x) w,  (1 (x) b)(v (x) w) = (-1)^{|b||v|} v (x) bw.
// The product basis is ordered even pairs first, each block lexicographic.
// The form is g((v,w),(v',w')) = (-1)^{|w||v'|} g1(v,v') g2(w,w').
SuperRep tensor_product(const SuperRep& a, const SuperRep& b, std::string name = "");
// Index of v_i (x) w_j in the product basis of tensor_product.
std::vector<std::vector<std::size_t>> tensor_index(const SuperSpace& a, const SuperSpace& b);

// Same generators on Pi V. The form (eta, omega) becomes (omega, -eta), which
// keeps odd generators invariant; applying the shift twice negates the form.
SuperRep parity_shift(const SuperRep& r);
// a -> -a^st on V*; carries no form.
SuperRep dual(const SuperRep& r);
// The same algebra acting diagonally on V1 + V2. Generator lists must match
// in length and parity.
SuperRep direct_sum(const SuperRep& a, const SuperRep& b, std::string name = "");
// Ungraded g in gl(L) acting on L + L* by diag(a, -a^T), with the natural
// pairing as a symmetric (metric) or skew (symplectic) form.
SuperRep lplus_ldual(const SuperRep& r, bool symplectic);
// Adds generators (e.g. a center) to an existing representation.
SuperRep extend(const SuperRep& r, const std::vector<Mat>& extra, std::string name);
// Adds the identity, dropping the form (the identity is never form-skew).
SuperRep with_center(const SuperRep& r, std::string name);
SuperRep forget_form(const SuperRep& r);

}  // namespace shl
