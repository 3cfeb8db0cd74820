#pragma once

// Exact rational scalars. All arithmetic in the library is over Q; nothing
// here ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cinfty {

using Scalar = mpq_class;

// mpq_class(n, d) does not canonicalize on its own; route literals through here.
inline Scalar rat(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

// Serialized as "p" or "p/q", canonical reduced form, positive denominator.
inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline Scalar parse_rational(const std::string& s) {
  Scalar q(s);
  q.canonicalize();
  return q;
}

// Pivot preference: fewer limbs in numerator and denominator keeps the
// elimination's intermediate fractions small.
inline size_t pivot_weight(const Scalar& q) {
  return mpz_size(q.get_num().get_mpz_t()) + mpz_size(q.get_den().get_mpz_t());
}

}  // namespace cinfty
