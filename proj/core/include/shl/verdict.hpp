#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shl/curvature.hpp"
#include "shl/prolongations.hpp"

namespace shl {

// One result record. Maps keep the keys sorted so that serialized reports
// are reproducible.
struct Verdict {
  std::string algebra;
  std::string computation;
  std::map<std::string, std::size_t> dims;
  std::map<std::string, bool> flags;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double seconds = 0;

  bool flag(const std::string& key) const {
    auto it = flags.find(key);
    return it != flags.end() && it->second;
  }
};

struct VerdictOptions {
  std::size_t max_size = 0;  // 0: default_max_size()
  bool parallel = true;
  // Post-hoc re-verification of every basis tensor (Bianchi, pairing,
  // module closure, block identities). Skipped above check_budget, measured
  // in basis tensors times d^4.
  bool properties = true;
  std::size_t check_budget = 40'000'000;
  std::optional<Mat> complex_structure;
};

// R(g) with dims R_even/R_odd and the post-hoc property flags.
Verdict compute_r(const RepPtr& rep, const VerdictOptions& opts = {});
// compute_r plus L(R(g)) = g, R^nabla(g) and the symmetric flag.
Verdict check_berger(const RepPtr& rep, const VerdictOptions& opts = {});
// R-bar(g) assembled directly and through Pi V; flags the skew-Berger property.
Verdict compute_rbar(const RepPtr& rep, const VerdictOptions& opts = {});
Verdict compute_prolong(const RepPtr& rep, bool symmetric, const VerdictOptions& opts = {});
Verdict compute_weak(const RepPtr& rep, ProlongKind kind, const VerdictOptions& opts = {});

}  // namespace shl
