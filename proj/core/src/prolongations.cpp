#include "shl/prolongations.hpp"

#include <algorithm>
#include <sstream>

#include "shl/error.hpp"

namespace shl {

const char* to_string(ProlongKind k) {
  switch (k) {
    case ProlongKind::Sym: return "sym";
    case ProlongKind::Skew: return "skew";
    case ProlongKind::Eta: return "eta";
    case ProlongKind::Omega: return "omega";
  }
  return "?";
}

const char* to_string(SchurType t) {
  switch (t) {
    case SchurType::Real: return "R";
    case SchurType::Complex: return "C";
    case SchurType::Quaternionic: return "H";
    case SchurType::Reducible: return "reducible";
  }
  return "?";
}

Mat ProlongSpace::value(std::size_t j, std::size_t i) const {
  const std::size_t n = rep->size();
  const Vec row = basis.vector(j);
  Vec c(row.begin() + static_cast<std::ptrdiff_t>(i * n), row.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return rep->combine(c);
}

Subspace ProlongSpace::in_endomorphisms() const {
  const std::size_t d = rep->space().dim();
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec v(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
      Mat m = value(j, i);
      for (std::size_t q = 0; q < d * d; ++q) v[i * d * d + q] = m.flat()[q];
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, d * d * d);
}

namespace {

void require_ungraded(const SuperRep& rep, std::size_t max_size) {
  if (rep.space().d1() != 0) throw InputError("prolongations are defined here for ungraded modules");
  const std::size_t limit = max_size ? max_size : default_max_size();
  if (rep.space().dim() > limit) {
    std::ostringstream os;
    os << "size ceiling exceeded: " << rep.name() << " acts on dimension " << rep.space().dim() << " > "
       << limit;
    throw CeilingError(os.str(), rep.space().dim(), limit);
  }
}

struct System {
  std::size_t d, n;
  RowReducer red;
  std::vector<std::pair<std::size_t, Rat>> terms;
  System(std::size_t d_, std::size_t n_) : d(d_), n(n_), red(d_ * n_) {}
  void add(std::size_t i, std::size_t k, const Rat& x) {
    if (sgn(x) != 0) terms.emplace_back(i * n + k, x);
  }
  void flush() {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow row;
    for (auto& [c, x] : terms) {
      if (!row.empty() && row.back().first == c)
        row.back().second += x;
      else
        row.emplace_back(c, x);
    }
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    terms.clear();
    if (!row.empty()) red.add(row);
  }
};

void add_complex_linearity(System& sys, const SuperRep& rep, const Mat& j) {
  // phi(J e_i) = J phi(e_i), in generator coordinates.
  std::vector<Vec> jc;
  for (std::size_t k = 0; k < rep.size(); ++k) {
    auto c = rep.coords(j * rep.gen(k));
    if (!c) throw InputError("complex structure does not preserve " + rep.name());
    jc.push_back(*c);
  }
  for (std::size_t i = 0; i < sys.d; ++i)
    for (std::size_t kk = 0; kk < sys.n; ++kk) {
      for (std::size_t l = 0; l < sys.d; ++l) sys.add(l, kk, j(l, i));
      for (std::size_t k = 0; k < sys.n; ++k) sys.add(i, k, -jc[k][kk]);
      sys.flush();
    }
}

ProlongSpace finish(const RepPtr& rep, ProlongKind kind, System& sys) {
  return ProlongSpace{rep, kind, Subspace::span_rows(sys.red.kernel())};
}

}  // namespace

ProlongSpace first_prolongation(const RepPtr& rep, bool symmetric, const ProlongOptions& opts) {
  require_ungraded(*rep, opts.max_size);
  const std::size_t d = rep->space().dim(), n = rep->size();
  System sys(d, n);
  const int s = symmetric ? -1 : 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = symmetric ? i + 1 : i; j < d; ++j)
      for (std::size_t v = 0; v < d; ++v) {
        for (std::size_t k = 0; k < n; ++k) {
          sys.add(i, k, rep->gen(k)(v, j));
          sys.add(j, k, s * rep->gen(k)(v, i));
        }
        sys.flush();
      }
  if (opts.complex_structure) add_complex_linearity(sys, *rep, *opts.complex_structure);
  return finish(rep, symmetric ? ProlongKind::Sym : ProlongKind::Skew, sys);
}

ProlongSpace weak_curvature(const RepPtr& rep, ProlongKind kind, const ProlongOptions& opts) {
  require_ungraded(*rep, opts.max_size);
  if (kind != ProlongKind::Eta && kind != ProlongKind::Omega)
    throw InputError("weak_curvature takes the eta or omega kind");
  const FormKind want = kind == ProlongKind::Eta ? FormKind::Ortho : FormKind::SkewOrtho;
  if (rep->space().kind() != want)
    throw InputError(std::string("weak_curvature(") + to_string(kind) + ") needs a " +
                     (kind == ProlongKind::Eta ? "metric" : "symplectic") + " representation");
  const std::size_t d = rep->space().dim(), n = rep->size();
  const Mat g = rep->space().gram();
  std::vector<Mat> h;  // h[k](j, l) = form(b_k e_j, e_l)
  for (std::size_t k = 0; k < n; ++k) h.push_back(rep->gen(k).transpose() * g);
  System sys(d, n);
  // The identity is invariant under cyclic shifts; keep one representative.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        auto key = std::array<std::size_t, 3>{i, j, l};
        if (std::array<std::size_t, 3>{j, l, i} < key || std::array<std::size_t, 3>{l, i, j} < key) continue;
        for (std::size_t k = 0; k < n; ++k) {
          sys.add(i, k, h[k](j, l));
          sys.add(j, k, h[k](l, i));
          sys.add(l, k, h[k](i, j));
        }
        sys.flush();
      }
  if (opts.complex_structure) add_complex_linearity(sys, *rep, *opts.complex_structure);
  return finish(rep, kind, sys);
}

Commutant commutant(const SuperRep& rep) {
  const SuperSpace& v = rep.space();
  const std::size_t d = v.dim();
  std::vector<long> var(d * d, -1);
  std::size_t nv = 0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (v.parity(r) == v.parity(c)) var[r * d + c] = static_cast<long>(nv++);
  RowReducer red(nv);
  for (const auto& g : rep.generators())
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        // (X g - g X)(r, c)
        std::vector<std::pair<std::size_t, Rat>> t;
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(g.m(k, c)) != 0 && var[r * d + k] >= 0) t.emplace_back(var[r * d + k], g.m(k, c));
          if (sgn(g.m(r, k)) != 0 && var[k * d + c] >= 0) t.emplace_back(var[k * d + c], -g.m(r, k));
        }
        std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow row;
        for (auto& [col, x] : t) {
          if (!row.empty() && row.back().first == col)
            row.back().second += x;
          else
            row.emplace_back(col, x);
        }
        std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
        if (!row.empty()) red.add(row);
      }
  Commutant out;
  Mat ker = red.kernel();
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    Mat m(d, d);
    for (std::size_t q = 0; q < d * d; ++q)
      if (var[q] >= 0) m(q / d, q % d) = ker(b, static_cast<std::size_t>(var[q]));
    out.basis.push_back(std::move(m));
  }
  switch (out.dim()) {
    case 1: out.type = SchurType::Real; break;
    case 2: out.type = SchurType::Complex; break;
    case 4: out.type = SchurType::Quaternionic; break;
    default: out.type = SchurType::Reducible;
  }
  return out;
}

WeakBergerVerdict weak_berger(const ProlongSpace& p) {
  const std::size_t n = p.rep->size(), d = p.rep->space().dim();
  RowReducer red(n);
  for (std::size_t j = 0; j < p.dim(); ++j) {
    Vec row = p.basis.vector(j);
    for (std::size_t i = 0; i < d; ++i) red.add(Vec(row.begin() + static_cast<std::ptrdiff_t>(i * n),
                                                     row.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
  }
  WeakBergerVerdict v;
  v.images = Subspace::span_rows(red.basis());
  v.dim = p.dim();
  v.weak_berger = n > 0 && v.images.dim() == n;
  return v;
}

}  // namespace shl
