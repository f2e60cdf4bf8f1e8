#include "shl/complex_rep.hpp"

#include "shl/error.hpp"

namespace shl {

ComplexRep complexify(const SuperRep& r) {
  ComplexRep c;
  c.name = r.name();
  c.d0 = r.space().d0();
  c.d1 = r.space().d1();
  c.kind = r.space().kind();
  const std::size_t n = r.space().dim();
  if (r.space().has_form()) c.gram = CMat{r.space().gram(), Mat(n, n)};
  for (const auto& g : r.generators()) c.gens.push_back({CMat{g.m, Mat(n, n)}, g.parity});
  return c;
}

namespace {

struct RealIndex {
  std::size_t d0, d1;
  std::size_t re(std::size_t r) const { return r < d0 ? r : 2 * d0 + (r - d0); }
  std::size_t im(std::size_t r) const { return r < d0 ? d0 + r : 2 * d0 + d1 + (r - d0); }
};

}  // namespace

Mat realify_matrix(const CMat& m, std::size_t d0, std::size_t d1) {
  const std::size_t n = d0 + d1;
  RealIndex ix{d0, d1};
  Mat out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out(ix.re(r), ix.re(c)) = m.re(r, c);
      out(ix.im(r), ix.im(c)) = m.re(r, c);
      out(ix.re(r), ix.im(c)) = -m.im(r, c);
      out(ix.im(r), ix.re(c)) = m.im(r, c);
    }
  return out;
}

Mat realified_j(std::size_t d0, std::size_t d1) {
  const std::size_t n = d0 + d1;
  return realify_matrix(CMat{Mat(n, n), Mat::identity(n)}, d0, d1);
}

SuperRep realify(const ComplexRep& c) {
  const std::size_t n = c.d0 + c.d1;
  RealIndex ix{c.d0, c.d1};
  SuperSpace v = SuperSpace::bare(2 * c.d0, 2 * c.d1);
  if (c.kind != FormKind::None) {
    Mat g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g(ix.re(i), ix.re(j)) = c.gram.re(i, j);
        g(ix.im(i), ix.im(j)) = -c.gram.re(i, j);
        g(ix.re(i), ix.im(j)) = -c.gram.im(i, j);
        g(ix.im(i), ix.re(j)) = -c.gram.im(i, j);
      }
    v = SuperSpace::with_form(c.kind, g.block(0, 0, 2 * c.d0, 2 * c.d0),
                              g.block(2 * c.d0, 2 * c.d0, 2 * c.d1, 2 * c.d1));
  }
  std::vector<SuperEndo> gens;
  for (const auto& [m, p] : c.gens) {
    gens.push_back(SuperEndo{2 * c.d0, p, realify_matrix(m, c.d0, c.d1)});
    CMat im{m.im * Rat(-1), m.re};
    gens.push_back(SuperEndo{2 * c.d0, p, realify_matrix(im, c.d0, c.d1)});
  }
  return SuperRep::make(c.name + " (realified)", std::move(v), std::move(gens));
}

}  // namespace shl
