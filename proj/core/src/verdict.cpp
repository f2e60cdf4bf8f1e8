#include "shl/verdict.hpp"

#include <chrono>
#include <sstream>

#include "shl/error.hpp"

namespace shl {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void describe_rep(Verdict& v, const SuperRep& r) {
  v.algebra = r.name();
  v.dims["V_even"] = r.space().d0();
  v.dims["V_odd"] = r.space().d1();
  v.dims["g_even"] = r.even_count();
  v.dims["g_odd"] = r.odd_count();
}

BianchiOptions bianchi_options(const VerdictOptions& o, bool formless) {
  BianchiOptions b;
  b.allow_formless = formless;
  b.max_size = o.max_size;
  b.parallel = o.parallel;
  return b;
}

bool within_budget(const VerdictOptions& o, std::size_t tensors, std::size_t d) {
  return o.properties && tensors * d * d * d * d <= o.check_budget;
}

// Re-checks every basis element of cs; records one flag per property.
void verify_curvature(Verdict& v, const CurvSpace& cs, const VerdictOptions& opts) {
  const auto basis = cs.basis();
  const SuperRep& rep = *cs.rep;
  if (!within_budget(opts, basis.size(), rep.space().dim())) {
    v.notes.push_back("post-hoc property checks skipped: above the check budget");
    return;
  }
  const bool graded = cs.kind == CurvKind::R && rep.space().d0() > 0 && rep.space().d1() > 0 &&
                      rep.space().kind() == FormKind::Ortho;
  bool bianchi = true, pairing = true, closed = true, blocks = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Tensor2& t = basis[i];
    if (!satisfies_bianchi(t)) {
      bianchi = false;
      v.witnesses.push_back("basis tensor " + std::to_string(i) + " violates the Bianchi identity");
    }
    if (cs.kind == CurvKind::R && rep.space().has_form() && !pairing_symmetric(t)) {
      pairing = false;
      v.witnesses.push_back("basis tensor " + std::to_string(i) + " violates pairing symmetry");
    }
    for (std::size_t k = 0; k < rep.size(); ++k)
      if (!cs.contains(act_on_curvature(rep.gen(k), rep.parity(k), t))) {
        closed = false;
        v.witnesses.push_back("generator " + std::to_string(k) + " moves basis tensor " +
                              std::to_string(i) + " out of the space");
      }
    if (graded) {
      try {
        block_decompose(t);
      } catch (const InternalError& e) {
        blocks = false;
        v.witnesses.push_back(e.what());
      }
    }
  }
  v.flags["bianchi_rechecked"] = bianchi;
  if (cs.kind == CurvKind::R && rep.space().has_form()) v.flags["pairing_symmetric"] = pairing;
  v.flags["module_closed"] = closed;
  if (graded) v.flags["block_identities"] = blocks;
}

bool is_ideal(const SuperRep& rep, const Subspace& images) {
  for (std::size_t r = 0; r < images.dim(); ++r) {
    const Vec row = images.vector(r);
    for (std::size_t k = 0; k < rep.size(); ++k) {
      Vec acc(rep.size());
      for (std::size_t i = 0; i < rep.size(); ++i)
        if (sgn(row[i]) != 0) {
          const Vec b = rep.bracket_coords(i, k);
          for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += row[i] * b[j];
        }
      if (!images.contains(acc)) return false;
    }
  }
  return true;
}

void record_images(Verdict& v, const SuperRep& rep, const BergerVerdict& b, const std::string& key) {
  v.dims["images"] = b.images.dim();
  v.flags[key] = b.berger;
  v.flags["images_form_ideal"] = is_ideal(rep, b.images);
  for (std::size_t k : b.missing) v.witnesses.push_back("generator " + std::to_string(k) + " is not an image");
}

CurvSpace curvature(Verdict& v, const RepPtr& rep, const VerdictOptions& opts) {
  describe_rep(v, *rep);
  CurvSpace cs = bianchi_kernel(rep, bianchi_options(opts, false));
  v.dims["R_even"] = cs.even.dim();
  v.dims["R_odd"] = cs.odd.dim();
  verify_curvature(v, cs, opts);
  return cs;
}

}  // namespace

Verdict compute_r(const RepPtr& rep, const VerdictOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v;
  v.computation = "R";
  curvature(v, rep, opts);
  v.seconds = since(t0);
  return v;
}

Verdict check_berger(const RepPtr& rep, const VerdictOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v;
  v.computation = "berger";
  const CurvSpace cs = curvature(v, rep, opts);
  const BergerVerdict b = is_berger(cs);
  record_images(v, *rep, b, "berger");
  const SecondKernel sk = second_kernel(cs);
  v.dims["Rnabla_even"] = sk.even.dim();
  v.dims["Rnabla_odd"] = sk.odd.dim();
  v.flags["symmetric"] = b.berger && sk.even.dim() == 0 && sk.odd.dim() == 0;
  v.seconds = since(t0);
  return v;
}

Verdict compute_rbar(const RepPtr& rep, const VerdictOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v;
  v.computation = "Rbar";
  describe_rep(v, *rep);
  const CurvSpace cs = rbar_kernel(rep, bianchi_options(opts, true));
  v.dims["Rbar"] = cs.even.dim();
  const CurvSpace shifted = bianchi_kernel(share(parity_shift(*rep)), bianchi_options(opts, true));
  v.dims["R_shift_even"] = shifted.even.dim();
  v.dims["R_shift_odd"] = shifted.odd.dim();
  v.flags["parity_shift_agrees"] = shifted.even.dim() == cs.even.dim() && shifted.odd.dim() == 0;
  record_images(v, *rep, is_berger(cs), "skew_berger");
  verify_curvature(v, cs, opts);
  v.seconds = since(t0);
  return v;
}

Verdict compute_prolong(const RepPtr& rep, bool symmetric, const VerdictOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v;
  v.computation = symmetric ? "prolongation_sym" : "prolongation_skew";
  describe_rep(v, *rep);
  ProlongOptions po;
  po.complex_structure = opts.complex_structure;
  po.max_size = opts.max_size;
  const ProlongSpace p = first_prolongation(rep, symmetric, po);
  v.dims["prolongation"] = p.dim();
  v.flags["nonzero"] = p.dim() > 0;
  if (opts.complex_structure) v.notes.push_back("restricted to complex-linear maps");
  if (within_budget(opts, p.dim(), rep->space().dim())) {
    const std::size_t d = rep->space().dim();
    bool ok = true;
    for (std::size_t j = 0; j < p.dim() && ok; ++j)
      for (std::size_t x = 0; x < d && ok; ++x)
        for (std::size_t y = 0; y < d && ok; ++y) {
          const Vec lhs = p.value(j, x).col(y), rhs = p.value(j, y).col(x);
          for (std::size_t r = 0; r < d && ok; ++r) ok = lhs[r] == (symmetric ? rhs[r] : -rhs[r]);
        }
    v.flags["identity_rechecked"] = ok;
  }
  v.seconds = since(t0);
  return v;
}

Verdict compute_weak(const RepPtr& rep, ProlongKind kind, const VerdictOptions& opts) {
  if (kind != ProlongKind::Eta && kind != ProlongKind::Omega)
    throw InputError("compute_weak needs kind eta or omega");
  const auto t0 = Clock::now();
  Verdict v;
  v.computation = std::string("weak_") + to_string(kind);
  describe_rep(v, *rep);
  ProlongOptions po;
  po.complex_structure = opts.complex_structure;
  po.max_size = opts.max_size;
  const ProlongSpace p = weak_curvature(rep, kind, po);
  v.dims["weak_curvature"] = p.dim();
  const WeakBergerVerdict w = weak_berger(p);
  v.dims["weak_images"] = w.images.dim();
  v.flags["weak_berger"] = w.weak_berger;
  // Every Berger algebra is weak-Berger; the skew analogue holds for R-bar.
  const BianchiOptions bo = bianchi_options(opts, false);
  const CurvSpace cs = kind == ProlongKind::Eta ? bianchi_kernel(rep, bo) : rbar_kernel(rep, bo);
  const bool strong = is_berger(cs).berger;
  v.flags[kind == ProlongKind::Eta ? "berger" : "skew_berger"] = strong;
  v.flags["strong_implies_weak"] = !strong || w.weak_berger;
  v.seconds = since(t0);
  return v;
}

}  // namespace shl
