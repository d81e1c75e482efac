#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "enriq/errors.hpp"

namespace enriq {

/// Element of F_{p^m}, encoded as Sum c_i * p^i where c_i is the coefficient
/// of t^i in the residue polynomial. The encoding doubles as the documented
/// total order on field elements (0 < 1 < ... < p-1 < t < t+1 < ...).
using Fq = std::uint32_t;

/// Arithmetic context for F_{p^m} with a fixed irreducible modulus.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// m over F_p, ordering candidate coefficient tuples (c_0, ..., c_{m-1}) with
/// c_0 most significant. A table of precomputed moduli for small (p, m) is
/// checked against the search in the test suite; the search is the fallback
/// for uncovered pairs, so representations are reproducible everywhere.
class FqTower {
 public:
  FqTower(long p, int m);

  long p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t q() const { return q_; }
  /// Coefficients of the modulus, degree 0 first, length m+1 (monic).
  const std::vector<long>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq from_base(long v) const;  // lift a F_p residue
  bool in_base(Fq a) const { return a < static_cast<Fq>(p_); }
  long to_base(Fq a) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  /// Frobenius x -> x^p (order m on the tower).
  Fq frob(Fq a) const;
  /// Inverse Frobenius x -> x^{p^(m-1)}.
  Fq frob_inv(Fq a) const;

  std::vector<long> decode(Fq a) const;  // coefficient vector, length m
  Fq encode(const std::vector<long>& coeffs) const;

 private:
  Fq mul_slow(Fq a, Fq b) const;

  long p_;
  int m_;
  std::uint64_t q_;
  std::vector<long> modulus_;
  // Full multiplication/inverse tables when q is small enough; the censuses
  // this library runs live well inside that regime.
  std::vector<Fq> mul_table_;
  std::vector<Fq> inv_table_;
  std::vector<Fq> frob_table_;
  bool tables_ = false;
};

/// Deterministic modulus lookup/search used by FqTower; exposed for tests.
std::vector<long> smallest_irreducible(long p, int m);

/// Process-wide tower cache (towers carry arithmetic tables; building one
/// per call would dominate small operations).
const FqTower& tower_for(long p, int m);

}  // namespace enriq
