#include "shl/rational.hpp"

#include <cctype>

#include "shl/error.hpp"

namespace shl {

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace shl
