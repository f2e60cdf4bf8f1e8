#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace shl {

// Exact rationals. mpq_class keeps values canonical (den > 0, gcd 1) after
// every arithmetic operation; parse_rat canonicalizes literals.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Renders "num/den", or just "num" when den == 1.
std::string to_string(const Rat& r);

// Accepts "a", "-a", "a/b". Throws InputError on anything else or b == 0.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

bool is_zero(const Vec& v);

}  // namespace shl
