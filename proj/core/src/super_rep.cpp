#include "shl/super_rep.hpp"

#include <algorithm>
#include <sstream>

#include "shl/error.hpp"

namespace shl {

SuperRep SuperRep::make(std::string name, SuperSpace space, std::vector<SuperEndo> gens) {
  return make(std::move(name), std::move(space), std::move(gens), Options{});
}

SuperRep SuperRep::make(std::string name, SuperSpace space, std::vector<SuperEndo> gens,
                        Options opts) {
  SuperRep r;
  r.name_ = std::move(name);
  for (auto& g : gens) {
    auto checked = make_endo(space, std::move(g.m), g.parity);
    g = std::move(checked);
  }
  std::stable_partition(gens.begin(), gens.end(),
                        [](const SuperEndo& e) { return e.parity == Parity::Even; });
  r.n_even_ = static_cast<std::size_t>(
      std::count_if(gens.begin(), gens.end(), [](const SuperEndo& e) { return e.parity == Parity::Even; }));
  r.gens_ = std::move(gens);
  r.space_ = std::move(space);

  std::vector<Mat> mats;
  for (const auto& g : r.gens_) mats.push_back(g.m);
  try {
    r.coord_ = std::make_shared<Coordinatizer>(mats, r.space_.dim(), r.space_.dim());
  } catch (const InputError&) {
    throw InputError("generators of '" + r.name_ + "' are linearly dependent");
  }

  if (opts.check_form && r.space_.has_form()) {
    for (std::size_t k = 0; k < r.gens_.size(); ++k)
      if (auto w = osp_violation(r.space_, r.gens_[k].m, r.gens_[k].parity)) {
        std::ostringstream os;
        os << "generator " << k << " of '" << r.name_ << "' does not preserve the form (basis pair "
           << w->first << ", " << w->second << ")";
        throw InputError(os.str());
      }
  }
  if (opts.check_closure) {
    for (std::size_t i = 0; i < r.gens_.size(); ++i)
      for (std::size_t j = i; j < r.gens_.size(); ++j) {
        auto b = supercommutator(r.gens_[i], r.gens_[j]);
        if (!r.coords(b.m)) {
          std::ostringstream os;
          os << "generators of '" << r.name_ << "' are not closed: [b" << i << ", b" << j
             << "] leaves the span";
          throw InputError(os.str());
        }
      }
  }
  return r;
}

SuperRep SuperRep::from_span(std::string name, SuperSpace space, const std::vector<Mat>& mats) {
  return from_span(std::move(name), std::move(space), mats, Options{});
}

SuperRep SuperRep::from_span(std::string name, SuperSpace space, const std::vector<Mat>& mats,
                             Options opts) {
  const std::size_t n = space.dim();
  RowReducer even(n * n), odd(n * n);
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw InputError("matrix has wrong size for " + space.label());
    auto [e, o] = split_parity(m, space.d0());
    if (!e.is_zero()) even.add(e.flat());
    if (!o.is_zero()) odd.add(o.flat());
  }
  std::vector<SuperEndo> gens;
  for (auto [red, par] : {std::pair{&even, Parity::Even}, std::pair{&odd, Parity::Odd}}) {
    Mat b = red->basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      gens.push_back(SuperEndo{space.d0(), par, Mat::unflatten(b.row(i), n, n)});
  }
  return make(std::move(name), std::move(space), std::move(gens), opts);
}

std::optional<Vec> SuperRep::coords(const Mat& m) const {
  if (!coord_) return std::nullopt;
  if (gens_.empty()) return m.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  return coord_->coords(m);
}

Mat SuperRep::combine(const Vec& coeffs) const {
  Mat out(space_.dim(), space_.dim());
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (sgn(coeffs[k]) != 0) out += gens_[k].m * coeffs[k];
  return out;
}

Vec SuperRep::bracket_coords(std::size_t i, std::size_t j) const {
  auto c = coords(supercommutator(gens_[i], gens_[j]).m);
  if (!c) throw InternalError("bracket left the algebra after closure was verified");
  return *c;
}

SuperRep SuperRep::renamed(std::string name) const {
  SuperRep r = *this;
  r.name_ = std::move(name);
  return r;
}

SuperRep osp_algebra(const SuperSpace& v, std::string name) {
  if (!v.has_form()) throw InputError("osp needs a space with a form");
  // Wedges only span osp for the Ortho symmetry type; otherwise solve the
  // invariance equations directly.
  if (v.kind() != FormKind::Ortho) return centralizer(v, {}, std::move(name));
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = i; j < v.dim(); ++j) mats.push_back(wedge(v, i, j).m);
  return SuperRep::from_span(std::move(name), v, mats);
}

SuperRep centralizer(const SuperSpace& v, const std::vector<Mat>& ops, std::string name,
                     bool within_osp) {
  const std::size_t n = v.dim();
  for (const auto& j : ops)
    if (homogeneous_parity(j, v.d0()) != Parity::Even)
      throw InputError("centralizer expects even operators");
  std::vector<Mat> found;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<long> var(n * n, -1);
    std::size_t nv = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((v.parity(r) + v.parity(c)) == p) var[r * n + c] = static_cast<long>(nv++);
    if (nv == 0) continue;
    RowReducer eqs(nv);
    auto push = [&](std::vector<std::pair<std::size_t, Rat>> terms) {
      std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
      SparseRow row;
      for (auto& [k, x] : terms) {
        if (!row.empty() && row.back().first == k)
          row.back().second += x;
        else
          row.emplace_back(k, x);
      }
      std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
      if (!row.empty()) eqs.add(row);
    };
    for (const auto& j : ops)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          std::vector<std::pair<std::size_t, Rat>> t;
          for (std::size_t k = 0; k < n; ++k) {
            if (sgn(j(r, k)) != 0 && var[k * n + c] >= 0) t.emplace_back(var[k * n + c], j(r, k));
            if (sgn(j(k, c)) != 0 && var[r * n + k] >= 0) t.emplace_back(var[r * n + k], -j(k, c));
          }
          push(std::move(t));
        }
    if (within_osp) {
      const Mat g = v.gram();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj) {
          const int s = koszul(bit(p) * bit(v.parity(i)));
          std::vector<std::pair<std::size_t, Rat>> t;
          for (std::size_t k = 0; k < n; ++k) {
            if (sgn(g(k, jj)) != 0 && var[k * n + i] >= 0) t.emplace_back(var[k * n + i], g(k, jj));
            if (sgn(g(i, k)) != 0 && var[k * n + jj] >= 0) t.emplace_back(var[k * n + jj], s * g(i, k));
          }
          push(std::move(t));
        }
    }
    Mat ker = eqs.kernel();
    for (std::size_t b = 0; b < ker.rows(); ++b) {
      Mat m(n, n);
      for (std::size_t q = 0; q < n * n; ++q)
        if (var[q] >= 0) m(q / n, q % n) = ker(b, static_cast<std::size_t>(var[q]));
      found.push_back(std::move(m));
    }
  }
  return SuperRep::from_span(std::move(name), within_osp ? v : v.without_form(), found);
}

std::vector<std::vector<std::size_t>> tensor_index(const SuperSpace& a, const SuperSpace& b) {
  std::vector<std::vector<std::size_t>> idx(a.dim(), std::vector<std::size_t>(b.dim()));
  std::size_t next = 0;
  for (Parity want : {Parity::Even, Parity::Odd})
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        if (a.parity(i) + b.parity(j) == want) idx[i][j] = next++;
  return idx;
}

namespace {

FormKind infer_kind(const Mat& ge, const Mat& go) {
  const bool ortho = ge.is_symmetric() && go.is_skew();
  const bool skew = ge.is_skew() && go.is_symmetric();
  if (ortho && skew) return ge.rows() ? FormKind::Ortho : FormKind::SkewOrtho;
  if (ortho) return FormKind::Ortho;
  if (skew) return FormKind::SkewOrtho;
  throw InputError("incompatible form types in product");
}

SuperRep make_or_span(std::string name, SuperSpace space, std::vector<SuperEndo> gens) {
  try {
    return SuperRep::make(name, space, gens);
  } catch (const InputError& e) {
    if (std::string(e.what()).find("dependent") == std::string::npos) throw;
    std::vector<Mat> mats;
    for (auto& g : gens) mats.push_back(std::move(g.m));
    return SuperRep::from_span(std::move(name), std::move(space), mats);
  }
}

}  // namespace

SuperRep tensor_product(const SuperRep& ra, const SuperRep& rb, std::string name) {
  const SuperSpace& a = ra.space();
  const SuperSpace& b = rb.space();
  const auto idx = tensor_index(a, b);
  std::size_t d0 = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (a.parity(i) == b.parity(j)) ++d0;
  const std::size_t n = a.dim() * b.dim();

  SuperSpace v = SuperSpace::bare(d0, n - d0);
  if (a.has_form() && b.has_form()) {
    Mat g(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) {
          if (sgn(a.form(i, k)) == 0) continue;
          for (std::size_t l = 0; l < b.dim(); ++l) {
            if (sgn(b.form(j, l)) == 0) continue;
            const int s = koszul(bit(b.parity(j)) * bit(a.parity(k)));
            g(idx[i][j], idx[k][l]) = s * a.form(i, k) * b.form(j, l);
          }
        }
    Mat ge = g.block(0, 0, d0, d0), go = g.block(d0, d0, n - d0, n - d0);
    if (!g.block(0, d0, d0, n - d0).is_zero()) throw InternalError("product form is not even");
    v = SuperSpace::with_form(infer_kind(ge, go), ge, go);
  }

  std::vector<SuperEndo> gens;
  for (const auto& x : ra.generators()) {
    Mat m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(x.m(k, i)) != 0)
          for (std::size_t j = 0; j < b.dim(); ++j) m(idx[k][j], idx[i][j]) = x.m(k, i);
    gens.push_back(SuperEndo{d0, x.parity, std::move(m)});
  }
  for (const auto& y : rb.generators()) {
    Mat m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const int s = koszul(bit(y.parity) * bit(a.parity(i)));
      for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t l = 0; l < b.dim(); ++l)
          if (sgn(y.m(l, j)) != 0) m(idx[i][l], idx[i][j]) = s * y.m(l, j);
    }
    gens.push_back(SuperEndo{d0, y.parity, std::move(m)});
  }
  if (name.empty()) name = ra.name() + " + " + rb.name();
  return make_or_span(std::move(name), std::move(v), std::move(gens));
}

SuperRep parity_shift(const SuperRep& r) {
  const SuperSpace& s = r.space();
  const std::size_t n = s.dim();
  std::vector<std::size_t> to(n);
  for (std::size_t i = 0; i < n; ++i) to[i] = i < s.d0() ? s.d1() + i : i - s.d0();
  SuperSpace v = SuperSpace::bare(s.d1(), s.d0());
  if (s.has_form()) {
    Mat ge = s.gram_odd();
    Mat go = s.gram_even() * Rat(-1);
    v = SuperSpace::with_form(s.kind() == FormKind::Ortho ? FormKind::SkewOrtho : FormKind::Ortho,
                              ge, go);
  }
  std::vector<SuperEndo> gens;
  for (const auto& g : r.generators()) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(to[i], to[j]) = g.m(i, j);
    gens.push_back(SuperEndo{s.d1(), g.parity, std::move(m)});
  }
  return SuperRep::make("Pi(" + r.name() + ")", std::move(v), std::move(gens));
}

SuperRep dual(const SuperRep& r) {
  std::vector<SuperEndo> gens;
  for (const auto& g : r.generators())
    gens.push_back(SuperEndo{g.d0, g.parity, supertranspose(g.m, g.parity, g.d0) * Rat(-1)});
  return SuperRep::make(r.name() + "*", r.space().without_form(), std::move(gens));
}

SuperRep direct_sum(const SuperRep& ra, const SuperRep& rb, std::string name) {
  if (ra.size() != rb.size()) throw InputError("direct_sum needs matching generator lists");
  const SuperSpace& a = ra.space();
  const SuperSpace& b = rb.space();
  const std::size_t d0 = a.d0() + b.d0(), n = a.dim() + b.dim();
  std::vector<std::size_t> ia(a.dim()), ib(b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) ia[i] = i < a.d0() ? i : d0 + (i - a.d0());
  for (std::size_t i = 0; i < b.dim(); ++i)
    ib[i] = i < b.d0() ? a.d0() + i : d0 + a.d1() + (i - b.d0());

  SuperSpace v = SuperSpace::bare(d0, n - d0);
  if (a.has_form() && b.has_form()) {
    if (a.kind() != b.kind()) throw InputError("direct_sum of spaces with different form types");
    Mat g(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) g(ia[i], ia[j]) = a.form(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) g(ib[i], ib[j]) = b.form(i, j);
    v = SuperSpace::with_form(a.kind(), g.block(0, 0, d0, d0), g.block(d0, d0, n - d0, n - d0));
  }
  std::vector<SuperEndo> gens;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    if (ra.parity(k) != rb.parity(k)) throw InputError("direct_sum generator parities differ");
    Mat m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(ia[i], ia[j]) = ra.gen(k)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(ib[i], ib[j]) = rb.gen(k)(i, j);
    gens.push_back(SuperEndo{d0, ra.parity(k), std::move(m)});
  }
  if (name.empty()) name = ra.name() + " (+) " + rb.name();
  return SuperRep::make(std::move(name), std::move(v), std::move(gens));
}

SuperRep lplus_ldual(const SuperRep& r, bool symplectic) {
  if (r.space().d1() != 0) throw InputError("L + L* is built for ungraded L only");
  const std::size_t n = r.space().d0();
  Mat g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = symplectic ? -1 : 1;
  }
  SuperSpace v = symplectic ? SuperSpace::with_form(FormKind::SkewOrtho, g, Mat(0, 0))
                            : SuperSpace::with_form(FormKind::Ortho, g, Mat(0, 0));
  std::vector<SuperEndo> gens;
  for (const auto& x : r.generators()) {
    Mat m(2 * n, 2 * n);
    m.set_block(0, 0, x.m);
    m.set_block(n, n, x.m.transpose() * Rat(-1));
    gens.push_back(SuperEndo{2 * n, Parity::Even, std::move(m)});
  }
  return SuperRep::make(r.name() + " on L+L*", std::move(v), std::move(gens));
}

SuperRep extend(const SuperRep& r, const std::vector<Mat>& extra, std::string name) {
  std::vector<SuperEndo> gens = r.generators();
  for (const auto& m : extra) gens.push_back(make_endo(r.space(), m));
  return SuperRep::make(std::move(name), r.space(), std::move(gens));
}

SuperRep forget_form(const SuperRep& r) {
  return SuperRep::make(r.name(), r.space().without_form(), r.generators());
}

SuperRep with_center(const SuperRep& r, std::string name) {
  return extend(forget_form(r), {Mat::identity(r.space().dim())}, std::move(name));
}

}  // namespace shl
