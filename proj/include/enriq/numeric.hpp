#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "enriq/errors.hpp"

namespace enriq {

// All lattice algebra is exact. Int/Rat are the only numeric types used by
// the library proper; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(r.get_num(), r.get_den());
}

inline Int ceil_rat(const Rat& r) {
  return ceil_div(r.get_num(), r.get_den());
}

/// Largest k >= 0 with k*k <= r. Requires r >= 0.
inline Int floor_sqrt(const Rat& r) {
  if (sgn(r) < 0) throw Error("floor_sqrt: negative argument");
  Int k;
  Int fl = floor_rat(r);
  mpz_sqrt(k.get_mpz_t(), fl.get_mpz_t());
  while (Rat((k + 1) * (k + 1)) <= r) ++k;
  while (k > 0 && Rat(k * k) > r) --k;
  return k;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error("integer does not fit in long: " + v.get_str());
  return v.get_si();
}

inline std::int64_t to_int64(const Int& v) {
  // mpz fits_slong covers int64 on LP64; spell the bound out anyway.
  if (v > Int("9223372036854775807") || v < Int("-9223372036854775808"))
    throw SchemaError("integer exceeds serialization range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

/// FNV-1a 64-bit, used for deterministic input digests in reports.
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace enriq
