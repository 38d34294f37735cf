#pragma once
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace arr {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) through arithmetic; nothing in the library ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage input.
Rat rat_parse(std::string_view s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace arr
