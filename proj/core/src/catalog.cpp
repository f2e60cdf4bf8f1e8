#include "shl/catalog.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "shl/error.hpp"

namespace shl {

namespace {

std::string center_suffix(CenterExtension c) {
  switch (c) {
    case CenterExtension::None: return "";
    case CenterExtension::ComplexJ: return "+J";
    case CenterExtension::QuaternionicSp1: return "+sp1";
  }
  return "";
}

std::size_t nat(long x, const std::string& what) {
  if (x < 0) throw InputError("catalog miss: negative parameter for " + what);
  return static_cast<std::size_t>(x);
}

void want_params(const AlgebraSpec& s, std::size_t n) {
  if (s.params.size() != n) {
    std::ostringstream os;
    os << "catalog miss: family '" << s.family << "' takes " << n << " parameter(s), got "
       << s.params.size();
    throw InputError(os.str());
  }
  for (long p : s.params) nat(p, s.family);
}

std::size_t P(const AlgebraSpec& s, std::size_t i) { return static_cast<std::size_t>(s.params[i]); }

// so(p,q): single parameter n means the definite so(n) = so(0,n).
std::pair<std::size_t, std::size_t> so_signature(const AlgebraSpec& s) {
  if (s.params.size() == 1) return {0, nat(s.params[0], "so")};
  want_params(s, 2);
  return {P(s, 0), P(s, 1)};
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Mat eta_diag(std::size_t p, std::size_t q) {
  Mat eta(p + q, p + q);
  for (std::size_t i = 0; i < p + q; ++i) eta(i, i) = i < p ? -1 : 1;
  return eta;
}

// Complex structure on the canonical odd block with n = p1 + q1 pairs
// (xi_{-a}, xi_a); the first p1 pairs carry the negative Hermitian sign.
Mat odd_complex_structure(std::size_t p1, std::size_t q1) {
  const std::size_t m = p1 + q1;
  Mat j(2 * m, 2 * m);
  for (std::size_t a = 1; a <= m; ++a) {
    const long eps = a <= p1 ? -1 : 1;
    j(m + a - 1, m - a) = eps;   // J xi_{-a} = eps xi_a
    j(m - a, m + a - 1) = -eps;  // J xi_a = -eps xi_{-a}
  }
  return j;
}

// Restricts r to the kernel of a linear functional given by its values on
// the generators.
SuperRep functional_kernel(const SuperRep& r, const Vec& values, std::string name) {
  std::vector<Mat> mats;
  std::size_t pivot = values.size();
  for (std::size_t k = 0; k < values.size(); ++k)
    if (sgn(values[k]) != 0) {
      pivot = k;
      break;
    }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == pivot) continue;
    if (pivot == values.size() || sgn(values[k]) == 0) {
      mats.push_back(r.gen(k));
    } else {
      Rat f = values[k] / values[pivot];
      mats.push_back(r.gen(k) - r.gen(pivot) * f);
    }
  }
  return SuperRep::from_span(std::move(name), r.space(), mats);
}

Rat supertrace(const Mat& m, std::size_t d0) {
  Rat s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += i < d0 ? m(i, i) : -m(i, i);
  return s;
}

SuperRep so_rep(std::size_t p, std::size_t q) {
  std::ostringstream os;
  os << "so(" << p << "," << q << ")";
  return osp_algebra(SuperSpace::canonical(p, q, 0), os.str());
}

SuperRep sp_real_rep(std::size_t m) {
  SuperSpace v = SuperSpace::with_form(FormKind::SkewOrtho, canonical_omega(2 * m), Mat(0, 0));
  return osp_algebra(v, "sp(" + std::to_string(2 * m) + ",R)");
}

SuperRep sl_rep(std::size_t n, bool gl) {
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !gl) continue;
      Mat m(n, n);
      m(i, j) = 1;
      mats.push_back(std::move(m));
    }
  if (!gl)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Mat m(n, n);
      m(i, i) = 1;
      m(i + 1, i + 1) = -1;
      mats.push_back(std::move(m));
    }
  std::string name = std::string(gl ? "gl(" : "sl(") + std::to_string(n) + ",R)";
  return SuperRep::from_span(name, SuperSpace::bare(n, 0), mats);
}

SuperRep osp_rep(std::size_t p, std::size_t q, std::size_t d1) {
  std::ostringstream os;
  os << "osp(" << p << "," << q << "|" << d1 << ")";
  return osp_algebra(SuperSpace::canonical(p, q, d1), os.str());
}

SuperRep u_super_rep(std::size_t p0, std::size_t q0, std::size_t p1, std::size_t q1, bool special) {
  SuperSpace v = SuperSpace::canonical(2 * p0, 2 * q0, 2 * (p1 + q1));
  Mat j = block_diag(pair_complex_structure(p0 + q0), odd_complex_structure(p1, q1));
  std::ostringstream os;
  os << (special ? "su(" : "u(") << p0 << "," << q0;
  if (p1 + q1) os << "|" << p1 << "," << q1;
  os << ")";
  SuperRep u = centralizer(v, {j}, os.str());
  if (!special) return u;
  Vec values(u.size());
  const std::size_t d0 = v.d0();
  for (std::size_t k = 0; k < u.size(); ++k) values[k] = supertrace(j * u.gen(k), d0);
  return functional_kernel(u, values, os.str());
}

SuperRep hosp_rep(std::size_t r, std::size_t s, std::size_t k) {
  SuperSpace v = SuperSpace::with_form(FormKind::Ortho, eta_diag(4 * r, 4 * s), quat_symplectic_gram(k));
  auto q = QuaternionicStructure::on(r + s, k);
  std::ostringstream os;
  os << "hosp(" << r << "," << s << "|" << k << ")";
  return centralizer(v, {q.j1, q.j2}, os.str());
}

SuperRep sp_pq_rep(std::size_t p, std::size_t q) {
  SuperSpace v = SuperSpace::canonical(4 * p, 4 * q, 0);
  auto js = QuaternionicStructure::on(p + q, 0);
  std::ostringstream os;
  os << "sp(" << p << "," << q << ")";
  return centralizer(v, {js.j1, js.j2}, os.str());
}

SuperRep so_quat_rep(std::size_t n) {
  SuperSpace v = SuperSpace::with_form(FormKind::SkewOrtho, quat_symplectic_gram(n), Mat(0, 0));
  auto js = QuaternionicStructure::on(n, 0);
  return centralizer(v, {js.j1, js.j2}, "so(" + std::to_string(n) + ",H)");
}

SuperRep sl_quat_rep(std::size_t n, bool gl) {
  std::vector<Mat> mats = sl_quat_basis(n);
  if (gl) mats.push_back(Mat::identity(4 * n));
  return SuperRep::from_span(std::string(gl ? "gl(" : "sl(") + std::to_string(n) + ",H)",
                             SuperSpace::bare(4 * n, 0), mats);
}

SuperRep pe_rep(std::size_t n) {
  std::vector<Mat> mats;
  const SuperRep sl = sl_rep(n, false);
  for (const auto& g : sl.generators()) {
    Mat m(2 * n, 2 * n);
    m.set_block(0, 0, g.m);
    m.set_block(n, n, g.m.transpose() * Rat(-1));
    mats.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat b(2 * n, 2 * n);
      b(i, n + j) = 1;
      b(j, n + i) = 1;
      mats.push_back(std::move(b));
      if (i == j) continue;
      Mat c(2 * n, 2 * n);
      c(n + i, j) = 1;
      c(n + j, i) = -1;
      mats.push_back(std::move(c));
    }
  return SuperRep::from_span("pe(" + std::to_string(n) + ")", SuperSpace::bare(n, n), mats);
}

SuperRep complex_family(const SuperRep& rational, const std::string& name) {
  ComplexRep c = complexify(rational);
  c.name = name;
  return realify(c).renamed(name);
}

SuperRep build(const AlgebraSpec& s) {
  const std::string& f = s.family;
  if (f == "so") {
    auto [p, q] = so_signature(s);
    return so_rep(p, q);
  }
  if (f == "sp_real") {
    want_params(s, 1);
    return sp_real_rep(P(s, 0));
  }
  if (f == "sp_pq") {
    want_params(s, 2);
    return sp_pq_rep(P(s, 0), P(s, 1));
  }
  if (f == "u" || f == "su") {
    want_params(s, 2);
    return u_super_rep(P(s, 0), P(s, 1), 0, 0, f == "su");
  }
  if (f == "sl_real" || f == "gl_real") {
    want_params(s, 1);
    return sl_rep(P(s, 0), f == "gl_real");
  }
  if (f == "so_complex") {
    want_params(s, 1);
    return complex_family(so_rep(0, P(s, 0)), "so(" + std::to_string(P(s, 0)) + ",C)");
  }
  if (f == "sl_complex") {
    want_params(s, 1);
    return complex_family(sl_rep(P(s, 0), false), "sl(" + std::to_string(P(s, 0)) + ",C)");
  }
  if (f == "sp_complex") {
    want_params(s, 1);
    return complex_family(sp_real_rep(P(s, 0)), "sp(" + std::to_string(2 * P(s, 0)) + ",C)");
  }
  if (f == "osp") {
    want_params(s, 3);
    return osp_rep(P(s, 0), P(s, 1), P(s, 2));
  }
  if (f == "osp_sk") {
    want_params(s, 3);
    std::ostringstream os;
    os << "osp^sk(" << P(s, 0) << "|" << P(s, 1) << "," << P(s, 2) << ")";
    return parity_shift(osp_rep(P(s, 1), P(s, 2), P(s, 0))).renamed(os.str());
  }
  if (f == "osp_complex") {
    want_params(s, 2);
    std::ostringstream os;
    os << "osp(" << P(s, 0) << "|" << P(s, 1) << ",C)";
    return complex_family(osp_rep(0, P(s, 0), P(s, 1)), os.str());
  }
  if (f == "u_super" || f == "su_super") {
    want_params(s, 4);
    return u_super_rep(P(s, 0), P(s, 1), P(s, 2), P(s, 3), f == "su_super");
  }
  if (f == "hosp") {
    want_params(s, 3);
    return hosp_rep(P(s, 0), P(s, 1), P(s, 2));
  }
  if (f == "pe") {
    want_params(s, 1);
    return pe_rep(P(s, 0));
  }
  if (f == "sl_quat" || f == "gl_quat") {
    want_params(s, 1);
    return sl_quat_rep(P(s, 0), f == "gl_quat");
  }
  if (f == "so_quat") {
    want_params(s, 1);
    return so_quat_rep(P(s, 0));
  }
  if (f == "quat_herm" || f == "quat_skew") {
    want_params(s, 1);
    const std::size_t n = P(s, 0);
    std::vector<std::pair<Mat, Mat>> acts;
    for (const auto& a : sl_quat_basis(n)) acts.emplace_back(a, a);
    const bool herm = f == "quat_herm";
    return matrix_module(std::string(herm ? "S" : "A") + std::to_string(n) + "(H)",
                         herm ? quat_hermitian_basis(n) : quat_skew_hermitian_basis(n), acts);
  }
  if (f == "quat_bimod") {
    want_params(s, 2);
    const std::size_t n = P(s, 0), m = P(s, 1);
    std::vector<std::pair<Mat, Mat>> acts;
    for (const auto& a : sl_quat_basis(n)) acts.emplace_back(a, Mat());
    for (const auto& b : sl_quat_basis(m)) acts.emplace_back(Mat(), b);
    std::ostringstream os;
    os << "H^" << n << " x H^" << m;
    return matrix_module(os.str(), quat_matrix_basis(n, m), acts);
  }
  if (f == "complex_herm") {
    want_params(s, 1);
    const std::size_t n = P(s, 0);
    std::vector<std::pair<Mat, Mat>> acts;
    const SuperRep sl = sl_rep(n, false);
    for (const auto& g : sl.generators())
      for (int part = 0; part < 2; ++part) {
        CMat x{part ? Mat(n, n) : g.m, part ? g.m : Mat(n, n)};
        Mat a = realify_matrix(x, n, 0);
        acts.emplace_back(a, a);
      }
    return matrix_module("H" + std::to_string(n) + "(C)", complex_hermitian_basis(n), acts);
  }
  if (f == "custom") throw InputError("catalog miss: custom algebras are loaded from a JSON file");
  throw InputError("catalog miss: unknown family '" + f + "'");
}

// Complex or quaternionic structure operators of a catalog space, for the
// center extensions.
std::vector<Mat> structure_operators(const AlgebraSpec& s, const SuperRep& r) {
  const std::string& f = s.family;
  if (f == "hosp" || f == "sp_pq" || f == "so_quat") {
    std::size_t n0 = r.space().d0() / 4, n1 = r.space().d1() / 4;
    auto q = QuaternionicStructure::on(n0, n1);
    return {q.j1, q.j2, q.j3};
  }
  if (f == "u" || f == "su" || f == "u_super" || f == "su_super") {
    std::size_t p1 = f.ends_with("super") ? P(s, 2) : 0, q1 = f.ends_with("super") ? P(s, 3) : 0;
    return {block_diag(pair_complex_structure(r.space().d0() / 2), odd_complex_structure(p1, q1))};
  }
  if (f == "so_complex" || f == "sl_complex" || f == "sp_complex" || f == "osp_complex")
    return {realified_j(r.space().d0() / 2, r.space().d1() / 2)};
  throw InputError("catalog miss: family '" + f + "' has no complex or quaternionic structure");
}

}  // namespace

namespace {

const std::vector<std::string> kPrefixes{"adjoint", "complex", "sym2", "alt2", "kahler"};

std::string trim(std::string_view t) {
  std::size_t a = 0, b = t.size();
  while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
  return std::string(t.substr(a, b - a));
}

// True if t is "(...)" with the first parenthesis closing at the end.
bool wrapped(const std::string& t) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    depth += t[i] == '(' ? 1 : t[i] == ')' ? -1 : 0;
    if (depth == 0 && i + 1 < t.size()) return false;
  }
  return depth == 0;
}

std::vector<std::string> split_top(const std::string& t, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : t) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw InputError("catalog miss: unbalanced parentheses in '" + t + "'");
    if (c == sep && depth == 0)
      out.emplace_back();
    else
      out.back() += c;
  }
  if (depth != 0) throw InputError("catalog miss: unbalanced parentheses in '" + t + "'");
  return out;
}

AlgebraSpec make_composite(std::string family, std::vector<AlgebraSpec> inner) {
  AlgebraSpec s;
  s.family = std::move(family);
  s.inner = std::move(inner);
  return s;
}

AlgebraSpec parse_plain(const std::string& text) {
  AlgebraSpec s;
  std::string body = text;
  if (body.ends_with("+sp1")) {
    s.center = CenterExtension::QuaternionicSp1;
    body.resize(body.size() - 4);
  } else if (body.ends_with("+J")) {
    s.center = CenterExtension::ComplexJ;
    body.resize(body.size() - 2);
  }
  auto colon = body.find(':');
  s.family = body.substr(0, colon);
  if (s.family.empty()) throw InputError("catalog miss: empty family name in '" + text + "'");
  if (colon != std::string::npos) {
    std::stringstream ss(body.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        s.params.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("catalog miss: bad parameter '" + item + "' in '" + text + "'");
      }
    }
  }
  return s;
}

// Parenthesize operands that would otherwise re-associate on parsing.
std::string operand(const AlgebraSpec& s, bool in_product) {
  const bool prefix = std::find(kPrefixes.begin(), kPrefixes.end(), s.family) != kPrefixes.end();
  if (s.family == "scalar" || s.family == "tensor" || (in_product && prefix)) return "(" + s.str() + ")";
  return s.str();
}

std::size_t tri(std::size_t n, bool sym) { return sym ? n * (n + 1) / 2 : n * (n - 1) / 2; }

}  // namespace

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw InputError("catalog miss: empty algebra spec");
  if (wrapped(t)) return parse(std::string_view(t).substr(1, t.size() - 2));
  if (t.ends_with("+R")) return make_composite("scalar", {parse(std::string_view(t).substr(0, t.size() - 2))});
  for (const auto& p : kPrefixes)
    if (t.starts_with(p + ":")) return make_composite(p, {parse(std::string_view(t).substr(p.size() + 1))});
  auto parts = split_top(t, '*');
  if (parts.size() > 1) {
    std::vector<AlgebraSpec> factors;
    for (const auto& part : parts) factors.push_back(parse(part));
    return make_composite("tensor", std::move(factors));
  }
  return parse_plain(t);
}

std::string AlgebraSpec::str() const {
  if (family == "scalar") return operand(inner[0], false) + "+R";
  if (family == "tensor") {
    std::string out;
    for (std::size_t i = 0; i < inner.size(); ++i) out += (i ? "*" : "") + operand(inner[i], true);
    return out;
  }
  if (composite()) return family + ":" + operand(inner[0], false);
  std::ostringstream os;
  os << family;
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ',' : ':') << params[i];
  os << center_suffix(center);
  return os.str();
}

std::size_t default_max_size() {
  if (const char* env = std::getenv("SHL_MAX_SIZE")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 16;
}

std::size_t predicted_dim(const AlgebraSpec& s) {
  const std::string& f = s.family;
  auto sum = [&](std::size_t from = 0) {
    std::size_t t = 0;
    for (std::size_t i = from; i < s.params.size(); ++i) t += nat(s.params[i], f);
    return t;
  };
  if (f == "adjoint") return make(s.inner[0], std::size_t(-1)).size();
  if (f == "scalar" || f == "kahler") return predicted_dim(s.inner[0]);
  if (f == "complex") return 2 * predicted_dim(s.inner[0]);
  if (f == "sym2" || f == "alt2") return tri(predicted_dim(s.inner[0]), f == "sym2");
  if (f == "tensor") {
    std::size_t t = 1;
    for (const auto& x : s.inner) t *= predicted_dim(x);
    return t;
  }
  if (f == "so" || f == "sl_real" || f == "gl_real" || f == "osp" || f == "osp_sk") return sum();
  if (f == "sp_real" || f == "u" || f == "su" || f == "so_complex" || f == "sl_complex" ||
      f == "osp_complex" || f == "u_super" || f == "su_super" || f == "pe")
    return 2 * sum();
  if (f == "sp_complex" || f == "sp_pq" || f == "hosp" || f == "sl_quat" || f == "gl_quat" ||
      f == "so_quat")
    return 4 * sum();
  if (f == "quat_herm" || f == "quat_skew") {
    want_params(s, 1);
    const std::size_t n = P(s, 0);
    return f == "quat_herm" ? 2 * n * n - n : 2 * n * n + n;
  }
  if (f == "quat_bimod") {
    want_params(s, 2);
    return 4 * P(s, 0) * P(s, 1);
  }
  if (f == "complex_herm") {
    want_params(s, 1);
    return P(s, 0) * P(s, 0);
  }
  if (f == "custom") return 0;
  throw InputError("catalog miss: unknown family '" + f + "'");
}

std::vector<std::string> family_names() {
  return {"so",         "sp_real",      "sp_pq",      "u",          "su",        "sl_real",
          "gl_real",    "so_complex",   "sl_complex", "sp_complex", "osp",       "osp_sk",
          "osp_complex", "u_super",     "su_super",   "hosp",       "pe",        "sl_quat",
          "gl_quat",    "so_quat",      "quat_herm",  "quat_skew",  "quat_bimod", "complex_herm",
          "adjoint",    "complex",      "sym2",       "alt2",       "kahler",    "tensor",
          "scalar",     "custom"};
}

SuperRep make(const AlgebraSpec& spec) { return make(spec, default_max_size()); }

SuperRep make(std::string_view family, std::vector<long> params, CenterExtension center) {
  AlgebraSpec s;
  s.family = std::string(family);
  s.params = std::move(params);
  s.center = center;
  return make(s);
}

SuperRep make(const AlgebraSpec& spec, std::size_t max_size) {
  const std::size_t n = predicted_dim(spec);
  if (n > max_size) {
    std::ostringstream os;
    os << "size ceiling exceeded: " << spec.str() << " acts on a space of dimension " << n
       << " > " << max_size;
    throw CeilingError(os.str(), n, max_size);
  }
  const std::string& f = spec.family;
  if (spec.composite()) {
    const std::size_t arity = f == "tensor" ? spec.inner.size() : 1;
    if (spec.inner.size() != arity || (f == "tensor" && arity < 2))
      throw InputError("catalog miss: malformed composite '" + f + "'");
    if (f == "tensor") {
      SuperRep r = make(spec.inner[0], max_size);
      for (std::size_t i = 1; i < spec.inner.size(); ++i) r = tensor_product(r, make(spec.inner[i], max_size));
      return r;
    }
    SuperRep base = make(spec.inner[0], max_size);
    if (f == "adjoint") return adjoint_rep(base);
    if (f == "complex") return complex_family(base, "(" + base.name() + ")^C");
    if (f == "sym2") return sym_square(base);
    if (f == "alt2") return alt_square(base);
    if (f == "scalar") return with_center(base, base.name() + " + R");
    if (f == "kahler") {
      if (spec.inner[0].composite()) throw InputError("catalog miss: kahler needs a plain family");
      return kaehler_symplectic(base, structure_operators(spec.inner[0], base).front());
    }
    throw InputError("catalog miss: unknown composite '" + f + "'");
  }
  SuperRep r = build(spec);
  if (spec.center == CenterExtension::None) return r;
  auto ops = structure_operators(spec, r);
  if (spec.center == CenterExtension::ComplexJ) ops.resize(1);
  for (const auto& j : ops)
    if (r.contains(j)) throw InputError("center extension is already contained in " + r.name());
  return extend(r, ops, r.name() + (spec.center == CenterExtension::ComplexJ ? " + RJ" : " + sp(1)"));
}

SuperRep adjoint_rep(const SuperRep& r) {
  const std::size_t n = r.size();
  const std::size_t d0 = r.even_count();
  std::vector<Mat> ad(n, Mat(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = r.bracket_coords(i, j);
      for (std::size_t k = 0; k < n; ++k) ad[i](k, j) = c[k];
    }
  auto try_form = [&](const std::function<Rat(std::size_t, std::size_t)>& f) -> std::optional<SuperSpace> {
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = f(i, j);
    if (!g.block(0, d0, d0, n - d0).is_zero()) return std::nullopt;
    try {
      return SuperSpace::with_form(FormKind::Ortho, g.block(0, 0, d0, d0), g.block(d0, d0, n - d0, n - d0));
    } catch (const InputError&) {
      return std::nullopt;
    }
  };
  auto killing = try_form([&](std::size_t i, std::size_t j) { return supertrace(ad[i] * ad[j], d0); });
  auto trace_form = [&] {
    return try_form([&](std::size_t i, std::size_t j) {
      return supertrace(r.gen(i) * r.gen(j), r.space().d0());
    });
  };
  SuperSpace v = killing ? *killing : trace_form().value_or(SuperSpace::bare(d0, n - d0));
  std::vector<Mat> mats(ad.begin(), ad.end());
  std::vector<SuperEndo> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(SuperEndo{d0, r.parity(i), ad[i]});
  try {
    return SuperRep::make("ad " + r.name(), v, gens);
  } catch (const InputError&) {
    return SuperRep::from_span("ad " + r.name(), v, mats);
  }
}

Mat pair_complex_structure(std::size_t pairs) {
  Mat j(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    j(2 * i + 1, 2 * i) = 1;
    j(2 * i, 2 * i + 1) = -1;
  }
  return j;
}

SuperRep kaehler_symplectic(const SuperRep& r, const Mat& j) {
  const SuperSpace& s = r.space();
  if (s.d1() != 0 || s.kind() != FormKind::Ortho)
    throw InputError("kaehler_symplectic needs a purely even metric representation");
  Mat w = j.transpose() * s.gram_even();
  return SuperRep::make(r.name(), SuperSpace::with_form(FormKind::SkewOrtho, w, Mat(0, 0)),
                        r.generators());
}

SuperRep matrix_module(std::string name, const std::vector<Mat>& basis,
                       const std::vector<std::pair<Mat, Mat>>& actions) {
  if (basis.empty()) throw InputError("matrix_module over an empty subspace");
  const std::size_t rows = basis[0].rows(), cols = basis[0].cols();
  Coordinatizer coord(basis, rows, cols);
  const std::size_t n = basis.size();
  std::vector<Mat> mats;
  for (const auto& [a, b] : actions) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Mat h(rows, cols);
      if (a.rows()) h += a * basis[k];
      if (b.rows()) h += basis[k] * b.transpose();
      auto c = coord.coords(h);
      if (!c) throw InputError("matrix_module: action does not preserve the subspace");
      for (std::size_t i = 0; i < n; ++i) m(i, k) = (*c)[i];
    }
    mats.push_back(std::move(m));
  }
  return SuperRep::from_span(std::move(name), SuperSpace::bare(n, 0), mats);
}

namespace {

std::vector<Mat> square_basis(std::size_t n, bool symmetric) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) {
      Mat m(n, n);
      m(i, j) = 1;
      m(j, i) = symmetric ? 1 : -1;
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<std::pair<Mat, Mat>> diagonal_actions(const SuperRep& r) {
  std::vector<std::pair<Mat, Mat>> acts;
  for (const auto& g : r.generators()) acts.emplace_back(g.m, g.m);
  return acts;
}

}  // namespace

SuperRep sym_square(const SuperRep& r) {
  if (r.space().d1()) throw InputError("sym_square is defined for ungraded modules");
  return matrix_module("S2(" + r.name() + ")", square_basis(r.space().d0(), true), diagonal_actions(r));
}

SuperRep alt_square(const SuperRep& r) {
  if (r.space().d1()) throw InputError("alt_square is defined for ungraded modules");
  return matrix_module("L2(" + r.name() + ")", square_basis(r.space().d0(), false), diagonal_actions(r));
}

std::vector<Mat> quat_matrix_basis(std::size_t n, std::size_t m) {
  std::vector<Mat> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (const auto& u : kQuatUnits) out.push_back(quat_unit_matrix(n, m, r, c, u));
  return out;
}

std::vector<Mat> sl_quat_basis(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < 4; ++u) {
        if (r == c && u == 0) continue;
        out.push_back(quat_unit_matrix(n, n, r, c, kQuatUnits[u]));
      }
  for (std::size_t r = 0; r + 1 < n; ++r)
    out.push_back(quat_unit_matrix(n, n, r, r, kQuatOne) - quat_unit_matrix(n, n, r + 1, r + 1, kQuatOne));
  return out;
}

namespace {

std::vector<Mat> quat_selfadjoint(std::size_t n, bool hermitian) {
  std::vector<Mat> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      for (std::size_t u = 0; u < 4; ++u) {
        Mat x = quat_unit_matrix(n, n, r, c, kQuatUnits[u]);
        Mat h = hermitian ? x + x.transpose() : x - x.transpose();
        if (!h.is_zero()) out.push_back(std::move(h));
      }
  return out;
}

}  // namespace

std::vector<Mat> quat_hermitian_basis(std::size_t n) { return quat_selfadjoint(n, true); }
std::vector<Mat> quat_skew_hermitian_basis(std::size_t n) { return quat_selfadjoint(n, false); }

std::vector<Mat> complex_hermitian_basis(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      for (int part = 0; part < 2; ++part) {
        CMat x{Mat(n, n), Mat(n, n)};
        (part ? x.im : x.re)(r, c) = 1;
        Mat real = realify_matrix(x, n, 0);
        Mat h = real + real.transpose();
        if (!h.is_zero()) out.push_back(std::move(h));
      }
  return out;
}

}  // namespace shl
