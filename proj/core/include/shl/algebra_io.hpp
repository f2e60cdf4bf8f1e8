#pragma once

#include <string>
#include <string_view>

#include "shl/super_rep.hpp"

namespace shl {

// JSON algebra specs:
// {"name", "space": {"d0","d1","p","q", "form"?, "gram_even"?, "gram_odd"?},
//  "generators": [{"parity": "even"|"odd", "matrix": [["num/den", ...], ...]}]}
// Omitted Gram blocks mean the canonical forms for (p, q | d1); "form":"none"
// marks a space without a form. Keys are emitted sorted.
SuperRep parse_algebra(std::string_view json_text);
SuperRep load_algebra(const std::string& path);
std::string emit_algebra(const SuperRep& r);

}  // namespace shl
