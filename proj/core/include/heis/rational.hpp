#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace heis {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on anything else.
Rat rat_parse(const std::string& s);

// Emits the reduced fraction, without "/1" for integers.
std::string rat_str(const Rat& r);

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace heis
