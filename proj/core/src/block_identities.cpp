#include <sstream>

#include "shl/curvature.hpp"
#include "shl/error.hpp"
#include "shl/prolongations.hpp"

namespace shl {

namespace {

// Blocks of R(e_a, e_b) with respect to V = V0 + V1:
//   [[A, B], [C, D]], B : V1 -> V0, C : V0 -> V1.
class Blocks {
 public:
  explicit Blocks(const Tensor2& t) : v_(t.rep->space()), d0_(v_.d0()), d_(v_.dim()) {
    m_.resize(d_ * d_);
    for (std::size_t a = 0; a < d_; ++a)
      for (std::size_t b = 0; b < d_; ++b) m_[a * d_ + b] = t.value(a, b);
  }

  std::size_t d0() const { return d0_; }
  std::size_t d() const { return d_; }
  Parity parity_of(std::size_t a) const { return v_.parity(a); }
  const Mat& value(std::size_t a, std::size_t b) const { return m_[a * d_ + b]; }

  // Block-projected image of e_c under R(e_a, e_b), as a full-length vector.
  Vec even_part(std::size_t a, std::size_t b, std::size_t c) const { return project(a, b, c, true); }
  Vec odd_part(std::size_t a, std::size_t b, std::size_t c) const { return project(a, b, c, false); }

  Rat form(const Vec& x, std::size_t j) const {
    Rat s;
    for (std::size_t i = 0; i < d_; ++i)
      if (sgn(x[i]) != 0) s += x[i] * v_.form(i, j);
    return s;
  }
  Rat form(std::size_t i, const Vec& y) const {
    Rat s;
    for (std::size_t j = 0; j < d_; ++j)
      if (sgn(y[j]) != 0) s += v_.form(i, j) * y[j];
    return s;
  }

  Mat a_block(std::size_t a, std::size_t b) const { return value(a, b).block(0, 0, d0_, d0_); }
  Mat d_block(std::size_t a, std::size_t b) const { return value(a, b).block(d0_, d0_, d_ - d0_, d_ - d0_); }

 private:
  Vec project(std::size_t a, std::size_t b, std::size_t c, bool even) const {
    Vec out(d_);
    const Mat& m = value(a, b);
    for (std::size_t r = even ? 0 : d0_; r < (even ? d0_ : d_); ++r) out[r] = m(r, c);
    return out;
  }

  const SuperSpace& v_;
  std::size_t d0_, d_;
  std::vector<Mat> m_;
};

Vec add(Vec a, const Vec& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s > 0)
      a[i] += b[i];
    else
      a[i] -= b[i];
  }
  return a;
}

[[noreturn]] void fail(const Tensor2& t, const std::string& name, std::initializer_list<std::size_t> at) {
  std::ostringstream os;
  os << "block identity '" << name << "' fails for a curvature tensor of " << t.rep->name() << " at (";
  bool first = true;
  for (auto i : at) {
    os << (first ? "" : ", ") << i;
    first = false;
  }
  os << ")";
  throw InternalError(os.str());
}

// pr_so(g0) on (V0, eta) or pr_sp(g0) on (V1, omega) as an ungraded algebra.
RepPtr projection(const SuperRep& rep, bool even) {
  const SuperSpace& v = rep.space();
  const std::size_t off = even ? 0 : v.d0(), n = even ? v.d0() : v.d1();
  std::vector<Mat> mats;
  for (std::size_t k = 0; k < rep.even_count(); ++k) mats.push_back(rep.gen(k).block(off, off, n, n));
  SuperSpace s = even ? SuperSpace::with_form(FormKind::Ortho, v.gram_even(), Mat())
                      : SuperSpace::with_form(FormKind::SkewOrtho, v.gram_odd(), Mat());
  return share(SuperRep::from_span(rep.name() + (even ? ":pr_so" : ":pr_sp"), s, mats));
}

// For an ungraded algebra h: coordinates of x -> h-part map in V* (x) h.
bool in_weak_space(const ProlongSpace& p, const std::vector<Mat>& values) {
  const std::size_t n = p.rep->size();
  Vec c(values.size() * n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto x = p.rep->coords(values[i]);
    if (!x) return false;
    for (std::size_t k = 0; k < n; ++k) c[i * n + k] = (*x)[k];
  }
  return p.basis.contains(c);
}

void check_even(const Tensor2& t, const Blocks& m, std::vector<std::string>& done) {
  const std::size_t d0 = m.d0(), d = m.d();
  const SuperRep& rep = *t.rep;
  // B and C determine each other.
  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y)
      for (std::size_t xi = d0; xi < d; ++xi)
        for (std::size_t de = d0; de < d; ++de)
          if (m.form(m.odd_part(x, xi, y), de) != -m.form(y, m.even_part(x, xi, de)))
            fail(t, "omega(C(x,xi)y,delta) = -eta(y,B(x,xi)delta)", {x, y, xi, de});
  done.emplace_back("BC");

  auto pr_so = projection(rep, true);
  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y) {
      if (!pr_so->contains(m.a_block(x, y))) fail(t, "A(x,y) in pr_so g0", {x, y});
      for (std::size_t z = 0; z < d0; ++z) {
        Vec s = add(add(m.even_part(x, y, z), m.even_part(y, z, x)), m.even_part(z, x, y));
        if (!is_zero(s)) fail(t, "A(x,y)z + A(y,z)x + A(z,x)y = 0", {x, y, z});
      }
    }
  done.emplace_back("A on L2(V0) in R(pr_so g0)");

  if (d > d0) {
    auto pr_sp = projection(rep, false);
    for (std::size_t a = d0; a < d; ++a)
      for (std::size_t b = d0; b < d; ++b) {
        if (!pr_sp->contains(m.d_block(a, b))) fail(t, "D(xi,delta) in pr_sp g0", {a, b});
        for (std::size_t c = d0; c < d; ++c) {
          Vec s = add(add(m.odd_part(a, b, c), m.odd_part(b, c, a)), m.odd_part(c, a, b));
          if (!is_zero(s)) fail(t, "D(xi,delta)theta + D(delta,theta)xi + D(theta,xi)delta = 0", {a, b, c});
        }
      }
  }
  done.emplace_back("D on S2(V1) in Rbar(pr_sp g0)");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y)
      for (std::size_t xi = d0; xi < d; ++xi) {
        Vec s = add(add(m.odd_part(x, y, xi), m.odd_part(y, xi, x)), m.odd_part(xi, x, y));
        if (!is_zero(s)) fail(t, "D(x,y)xi + C(y,xi)x + C(xi,x)y = 0", {x, y, xi});
      }
  done.emplace_back("DC");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t xi = d0; xi < d; ++xi)
      for (std::size_t de = d0; de < d; ++de) {
        Vec s = add(add(m.even_part(xi, de, x), m.even_part(de, x, xi), -1), m.even_part(x, xi, de));
        if (!is_zero(s)) fail(t, "A(xi,delta)x - B(delta,x)xi + B(x,xi)delta = 0", {x, xi, de});
      }
  done.emplace_back("AB");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y)
      for (std::size_t xi = d0; xi < d; ++xi)
        for (std::size_t de = d0; de < d; ++de) {
          if (m.form(m.odd_part(x, y, xi), de) != m.form(m.even_part(xi, de, x), y))
            fail(t, "omega(D(x,y)xi,delta) = eta(A(xi,delta)x,y)", {x, y, xi, de});
          if (m.form(m.odd_part(x, xi, y), de) != -m.form(m.odd_part(y, de, x), xi))
            fail(t, "omega(C(x,xi)y,delta) = -omega(C(y,delta)x,xi)", {x, y, xi, de});
          if (m.form(m.even_part(x, xi, de), y) != -m.form(m.even_part(y, de, xi), x))
            fail(t, "eta(B(x,xi)delta,y) = -eta(B(y,delta)xi,x)", {x, y, xi, de});
        }
  done.emplace_back("pairing DA");
  done.emplace_back("pairing CC");
  done.emplace_back("pairing BB");
}

void check_odd(const Tensor2& t, const Blocks& m, std::vector<std::string>& done) {
  const std::size_t d0 = m.d0(), d = m.d();
  const SuperRep& rep = *t.rep;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (m.parity_of(a) != m.parity_of(b)) continue;
      for (std::size_t z = 0; z < d0; ++z)
        for (std::size_t xi = d0; xi < d; ++xi)
          if (m.form(m.odd_part(a, b, z), xi) != -m.form(z, m.even_part(a, b, xi)))
            fail(t, "omega(C(.,.)z,xi) = -eta(z,B(.,.)xi)", {a, b, z, xi});
    }
  done.emplace_back("BC");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y)
      for (std::size_t z = 0; z < d0; ++z) {
        Vec s = add(add(m.odd_part(x, y, z), m.odd_part(y, z, x)), m.odd_part(z, x, y));
        if (!is_zero(s)) fail(t, "C(x,y)z + C(y,z)x + C(z,x)y = 0", {x, y, z});
      }
  done.emplace_back("C cyclic");

  for (std::size_t a = d0; a < d; ++a)
    for (std::size_t b = d0; b < d; ++b)
      for (std::size_t c = d0; c < d; ++c) {
        Vec s = add(add(m.even_part(a, b, c), m.even_part(b, c, a)), m.even_part(c, a, b));
        if (!is_zero(s)) fail(t, "B(xi,delta)theta + B(delta,theta)xi + B(theta,xi)delta = 0", {a, b, c});
      }
  done.emplace_back("B cyclic");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t y = 0; y < d0; ++y)
      for (std::size_t xi = d0; xi < d; ++xi) {
        Vec s = add(add(m.even_part(x, y, xi), m.even_part(y, xi, x)), m.even_part(xi, x, y));
        if (!is_zero(s)) fail(t, "B(x,y)xi + A(y,xi)x + A(xi,x)y = 0", {x, y, xi});
      }
  done.emplace_back("BA");

  for (std::size_t x = 0; x < d0; ++x)
    for (std::size_t xi = d0; xi < d; ++xi)
      for (std::size_t de = d0; de < d; ++de) {
        Vec s = add(add(m.odd_part(xi, de, x), m.odd_part(de, x, xi), -1), m.odd_part(x, xi, de));
        if (!is_zero(s)) fail(t, "C(xi,delta)x - D(delta,x)xi + D(x,xi)delta = 0", {x, xi, de});
      }
  done.emplace_back("CD");

  // Slices: x -> A(x, xi) in P_eta(pr_so g0), xi -> D(xi, x) in P_omega(pr_sp g0).
  if (d0 > 0 && d > d0) {
    ProlongOptions opts;
    opts.max_size = d;
    auto pe = weak_curvature(projection(rep, true), ProlongKind::Eta, opts);
    for (std::size_t xi = d0; xi < d; ++xi) {
      std::vector<Mat> vals;
      for (std::size_t x = 0; x < d0; ++x) vals.push_back(m.a_block(x, xi));
      if (!in_weak_space(pe, vals)) fail(t, "R(.,xi) in P_eta(pr_so g0)", {xi});
    }
    auto po = weak_curvature(projection(rep, false), ProlongKind::Omega, opts);
    for (std::size_t x = 0; x < d0; ++x) {
      std::vector<Mat> vals;
      for (std::size_t xi = d0; xi < d; ++xi) vals.push_back(m.d_block(xi, x));
      if (!in_weak_space(po, vals)) fail(t, "R(.,x) in P_omega(pr_sp g0)", {x});
    }
  }
  done.emplace_back("R(.,xi) in P_eta");
  done.emplace_back("R(.,x) in P_omega");
}

}  // namespace

std::vector<std::string> block_decompose(const Tensor2& r) {
  if (r.layout->symmetry() != PairLayout::Symmetry::SuperAntisymmetric)
    throw InputError("block_decompose expects a curvature tensor, not a skew one");
  if (r.rep->space().kind() != FormKind::Ortho)
    throw InputError("block_decompose needs an orthosymplectic representation");
  Blocks m(r);
  std::vector<std::string> done;
  if (r.parity == Parity::Even)
    check_even(r, m, done);
  else
    check_odd(r, m, done);
  return done;
}

}  // namespace shl
