#include "shl/curvature.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "shl/error.hpp"

namespace shl {

Vec Tensor2::value_coords(std::size_t a, std::size_t b) const {
  const std::size_t n = rep->size();
  Vec out(n);
  const auto& slot = layout->lookup(a, b);
  if (slot.sign == 0) return out;
  for (std::size_t k = 0; k < n; ++k) {
    const Rat& x = coords[slot.index * n + k];
    if (sgn(x) != 0) out[k] = slot.sign > 0 ? x : Rat(-x);
  }
  return out;
}

Mat Tensor2::value(std::size_t a, std::size_t b) const { return rep->combine(value_coords(a, b)); }

Tensor2 CurvSpace::tensor(Parity p, std::size_t i) const {
  return Tensor2{rep, layout, p, part(p).vector(i)};
}

std::vector<Tensor2> CurvSpace::basis() const {
  std::vector<Tensor2> out;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (std::size_t i = 0; i < dim(p); ++i) out.push_back(tensor(p, i));
  return out;
}

bool CurvSpace::contains(const Tensor2& t) const {
  if (t.rep.get() != rep.get() && !(t.rep->size() == rep->size() && t.layout->size() == layout->size()))
    return false;
  return part(t.parity).contains(t.coords);
}

namespace {

// Nonzero entries of each generator column: cols[k][w] = {(v, (g_k)_{v,w})}.
using ColumnTable = std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>>;

ColumnTable column_table(const SuperRep& rep) {
  const std::size_t d = rep.space().dim();
  ColumnTable t(rep.size(), std::vector<std::vector<std::pair<std::size_t, Rat>>>(d));
  for (std::size_t k = 0; k < rep.size(); ++k)
    for (std::size_t w = 0; w < d; ++w)
      for (std::size_t v = 0; v < d; ++v)
        if (sgn(rep.gen(k)(v, w)) != 0) t[k][w].emplace_back(v, rep.gen(k)(v, w));
  return t;
}

SparseRow merge_terms(std::vector<std::pair<std::size_t, Rat>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow row;
  for (auto& [c, x] : terms) {
    if (!row.empty() && row.back().first == c)
      row.back().second += x;
    else
      row.emplace_back(c, std::move(x));
  }
  std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
  return row;
}

// Kernel of the (super) Bianchi system for tensors of parity rho, in full
// layout coordinates. Multiset triples suffice: permuting the arguments only
// changes the sign of the cyclic sum.
Subspace solve_bianchi(const SuperRep& rep, const PairLayout& layout, const ColumnTable& cols, Parity rho) {
  const std::size_t n = rep.size(), d = layout.dim();
  const std::size_t full = layout.size() * n;
  std::vector<long> comp(full, -1);
  std::vector<std::size_t> back;
  for (std::size_t p = 0; p < layout.size(); ++p)
    for (std::size_t k = 0; k < n; ++k)
      if (rep.parity(k) == layout.pair_parity(p) + rho) {
        comp[p * n + k] = static_cast<long>(back.size());
        back.push_back(p * n + k);
      }
  const std::size_t nc = back.size();
  if (nc == 0) return Subspace(full);

  RowReducer red(nc);
  std::vector<std::vector<std::pair<std::size_t, Rat>>> acc(d);
  for (std::size_t a = 0; a < d && red.rank() < nc; ++a)
    for (std::size_t b = a; b < d; ++b)
      for (std::size_t c = b; c < d; ++c) {
        const int pa = bit(layout.parity(a)), pb = bit(layout.parity(b)), pc = bit(layout.parity(c));
        auto term = [&](int s, std::size_t x, std::size_t y, std::size_t w) {
          const auto& slot = layout.lookup(x, y);
          if (slot.sign == 0) return;
          const int sign = s * slot.sign;
          for (std::size_t k = 0; k < n; ++k) {
            const long col = comp[slot.index * n + k];
            if (col < 0) continue;
            for (const auto& [v, val] : cols[k][w])
              acc[v].emplace_back(static_cast<std::size_t>(col), sign > 0 ? val : Rat(-val));
          }
        };
        term(1, a, b, c);
        term(koszul(pa * (pb + pc)), b, c, a);
        term(koszul(pc * (pa + pb)), c, a, b);
        for (auto& terms : acc) {
          if (terms.empty()) continue;
          SparseRow row = merge_terms(terms);
          terms.clear();
          if (!row.empty()) red.add(row);
        }
      }
  Mat ker = red.kernel();
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec v(full);
    for (std::size_t j = 0; j < nc; ++j) v[back[j]] = ker(i, j);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, full);
}

void check_ceiling(const SuperRep& rep, std::size_t max_size) {
  const std::size_t limit = max_size ? max_size : default_max_size();
  const std::size_t d = rep.space().dim();
  if (d > limit) {
    std::ostringstream os;
    os << "size ceiling exceeded: " << rep.name() << " acts on dimension " << d << " > " << limit
       << " (system would have " << d * d * rep.size() << " unknowns)";
    throw CeilingError(os.str(), d, limit);
  }
}

CurvSpace solve_both(const RepPtr& rep, std::shared_ptr<const PairLayout> layout, CurvKind kind,
                     bool parallel) {
  const ColumnTable cols = column_table(*rep);
  CurvSpace out{rep, layout, kind, Subspace(), Subspace()};
  if (parallel) {
    auto odd = std::async(std::launch::async, [&] { return solve_bianchi(*rep, *layout, cols, Parity::Odd); });
    out.even = solve_bianchi(*rep, *layout, cols, Parity::Even);
    out.odd = odd.get();
  } else {
    out.even = solve_bianchi(*rep, *layout, cols, Parity::Even);
    out.odd = solve_bianchi(*rep, *layout, cols, Parity::Odd);
  }
  return out;
}

std::vector<std::vector<Mat>> all_values(const Tensor2& t) {
  const std::size_t d = t.layout->dim();
  std::vector<std::vector<Mat>> m(d, std::vector<Mat>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) m[a][b] = t.value(a, b);
  return m;
}

}  // namespace

CurvSpace bianchi_kernel(const RepPtr& rep, const BianchiOptions& opts) {
  if (!rep->space().has_form() && !opts.allow_formless)
    throw InputError("bianchi_kernel: '" + rep->name() + "' carries no form");
  check_ceiling(*rep, opts.max_size);
  auto layout = std::make_shared<const PairLayout>(PairLayout::super_antisymmetric(rep->space()));
  return solve_both(rep, layout, CurvKind::R, opts.parallel);
}

CurvSpace rbar_kernel(const RepPtr& rep, const BianchiOptions& opts) {
  if (rep->space().d1() != 0) throw InputError("rbar_kernel needs a purely even space");
  check_ceiling(*rep, opts.max_size);
  auto layout = std::make_shared<const PairLayout>(PairLayout::symmetric(rep->space().dim()));
  const ColumnTable cols = column_table(*rep);
  CurvSpace out{rep, layout, CurvKind::RBar, Subspace(), Subspace(layout->size() * rep->size())};
  out.even = solve_bianchi(*rep, *layout, cols, Parity::Even);
  return out;
}

bool satisfies_bianchi(const Tensor2& t) {
  const std::size_t d = t.layout->dim();
  const auto m = all_values(t);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const int pa = bit(t.layout->parity(a)), pb = bit(t.layout->parity(b)), pc = bit(t.layout->parity(c));
        const int s2 = koszul(pa * (pb + pc)), s3 = koszul(pc * (pa + pb));
        for (std::size_t v = 0; v < d; ++v) {
          Rat x = m[a][b](v, c) + s2 * m[b][c](v, a) + s3 * m[c][a](v, b);
          if (sgn(x) != 0) return false;
        }
      }
  return true;
}

bool pairing_symmetric(const Tensor2& t) {
  const SuperSpace& v = t.rep->space();
  const std::size_t d = v.dim();
  const Mat g = v.gram();
  const auto m = all_values(t);
  std::vector<std::vector<Mat>> nn(d, std::vector<Mat>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) nn[a][b] = m[a][b].transpose() * g;  // (z,w) -> g(R(a,b)z, w)
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t w = 0; w < d; ++w) {
          const int s = koszul((bit(v.parity(x)) + bit(v.parity(y))) * (bit(v.parity(z)) + bit(v.parity(w))));
          if (nn[x][y](z, w) != s * nn[z][w](x, y)) return false;
        }
  return true;
}

Subspace span_of_images(const CurvSpace& r) {
  const std::size_t n = r.rep->size();
  RowReducer red(n);
  for (const auto& t : r.basis())
    for (std::size_t p = 0; p < r.layout->size() && red.rank() < n; ++p) {
      SparseRow row;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(t.coords[p * n + k]) != 0) row.emplace_back(k, t.coords[p * n + k]);
      if (!row.empty()) red.add(row);
    }
  return Subspace::span_rows(red.basis());
}

BergerVerdict is_berger(const CurvSpace& r) {
  BergerVerdict v;
  const std::size_t n = r.rep->size();
  v.images = span_of_images(r);
  v.berger = n > 0 && v.images == Subspace::full(n);
  if (!v.berger)
    for (std::size_t k = 0; k < n; ++k)
      if (!v.images.contains(basis_vector(n, k))) v.missing.push_back(k);
  return v;
}

SecondKernel second_kernel(const CurvSpace& r) {
  const auto basis = r.basis();
  const std::size_t nb = basis.size(), d = r.layout->dim(), n = r.rep->size();
  SecondKernel out{Subspace(d * nb), Subspace(d * nb)};
  if (nb == 0) return out;
  // vc[i][y*d+z] = generator coordinates of R_i(e_y, e_z)
  std::vector<std::vector<Vec>> vc(nb, std::vector<Vec>(d * d));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) vc[i][y * d + z] = basis[i].value_coords(y, z);

  for (Parity sigma : {Parity::Even, Parity::Odd}) {
    std::vector<long> comp(d * nb, -1);
    std::vector<std::size_t> back;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t i = 0; i < nb; ++i)
        if (basis[i].parity == r.layout->parity(x) + sigma) {
          comp[x * nb + i] = static_cast<long>(back.size());
          back.push_back(x * nb + i);
        }
    if (back.empty()) continue;
    RowReducer red(back.size());
    std::vector<std::vector<std::pair<std::size_t, Rat>>> acc(n);
    for (std::size_t x = 0; x < d && red.rank() < back.size(); ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          const int px = bit(r.layout->parity(x)), py = bit(r.layout->parity(y)), pz = bit(r.layout->parity(z));
          auto term = [&](int s, std::size_t a, std::size_t b, std::size_t c) {
            for (std::size_t i = 0; i < nb; ++i) {
              const long col = comp[a * nb + i];
              if (col < 0) continue;
              const Vec& val = vc[i][b * d + c];
              for (std::size_t k = 0; k < n; ++k)
                if (sgn(val[k]) != 0) acc[k].emplace_back(static_cast<std::size_t>(col), s > 0 ? val[k] : Rat(-val[k]));
            }
          };
          term(1, x, y, z);
          term(koszul(px * (py + pz)), y, z, x);
          term(koszul(pz * (px + py)), z, x, y);
          for (auto& terms : acc) {
            if (terms.empty()) continue;
            SparseRow row = merge_terms(terms);
            terms.clear();
            if (!row.empty()) red.add(row);
          }
        }
    Mat ker = red.kernel();
    std::vector<Vec> vecs;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      Vec v(d * nb);
      for (std::size_t j = 0; j < back.size(); ++j) v[back[j]] = ker(i, j);
      vecs.push_back(std::move(v));
    }
    (sigma == Parity::Even ? out.even : out.odd) = Subspace::span(vecs, d * nb);
  }
  return out;
}

Tensor2 tensor_from_values(const RepPtr& rep, const std::shared_ptr<const PairLayout>& layout, Parity parity,
                           const std::function<Mat(std::size_t, std::size_t)>& value) {
  const std::size_t n = rep->size();
  Tensor2 t{rep, layout, parity, Vec(layout->size() * n)};
  for (std::size_t p = 0; p < layout->size(); ++p) {
    auto [a, b] = layout->pair(p);
    Mat m = value(a, b);
    auto c = rep->coords(m);
    if (!c) {
      std::ostringstream os;
      os << "value on the basis pair (" << a << ", " << b << ") is not in " << rep->name();
      throw InputError(os.str());
    }
    for (std::size_t k = 0; k < n; ++k) t.coords[p * n + k] = (*c)[k];
  }
  return t;
}

Tensor2 act_on_curvature(const Mat& a, Parity pa, const Tensor2& r) {
  const SuperSpace& v = r.rep->space();
  const std::size_t d = v.dim();
  const int ia = bit(pa), ir = bit(r.parity);
  return tensor_from_values(r.rep, r.layout, pa + r.parity, [&](std::size_t i, std::size_t j) {
    const Parity pv = r.parity + v.parity(i) + v.parity(j);
    Mat out = supercommutator(a, pa, r.value(i, j), pv);
    Vec lhs(r.rep->size()), rhs(r.rep->size());
    for (std::size_t l = 0; l < d; ++l) {
      if (sgn(a(l, i)) != 0) {
        Vec c = r.value_coords(l, j);
        for (std::size_t k = 0; k < c.size(); ++k) lhs[k] += a(l, i) * c[k];
      }
      if (sgn(a(l, j)) != 0) {
        Vec c = r.value_coords(i, l);
        for (std::size_t k = 0; k < c.size(); ++k) rhs[k] += a(l, j) * c[k];
      }
    }
    out -= r.rep->combine(lhs) * Rat(koszul(ia * ir));
    out -= r.rep->combine(rhs) * Rat(koszul(ia * (ir + bit(v.parity(i)))));
    return out;
  });
}

}  // namespace shl
