#pragma once

#include <gmpxx.h>

#include <string>

namespace schalg {

// Exact scalar for all chain-level arithmetic. Structure constants of the
// algebras here are small integers, so mpq stays single-limb in practice.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace schalg
