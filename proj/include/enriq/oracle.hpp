#pragma once

#include <vector>

#include "enriq/generatrix.hpp"
#include "enriq/lattice.hpp"
#include "enriq/marking.hpp"

namespace enriq::oracle {

/// Independent brute-force reference implementations. These certify the
/// optimized kernels and deliberately share no algorithmic path with them:
/// plain box scans, full cartesian products, and tuple-based subspace
/// dedup with a self-contained Gauss elimination. Exponential cost is
/// accepted at desk scale; every routine is serial.

/// All vectors of the given norm via a full coordinate-box scan; bounds come
/// from the diagonal of the inverse Gram matrix, not from a Cholesky
/// recursion. Sorted lexicographically.
std::vector<IMat> box_roots(const IntegerLattice& l, const Int& t);

/// All k-dimensional totally isotropic subspaces of the form over F_p,
/// enumerated as spans of k-tuples of projective lines with its own
/// elimination and dedup. Supports k <= 2. Returns canonical basis
/// matrices (own reduced form).
std::vector<Matrix<long>> iso_subspaces(const FiniteQuadraticSpace& v, std::size_t k);

struct CensusCounts {
  unsigned long long total = 0;
  unsigned long long isotropic = 0;
  unsigned long long characteristic = 0;
  unsigned long long strict = 0;
};

/// Filterless scan of the middle Grassmannian of V tensor F_{p^m} counting
/// each predicate with self-contained field arithmetic (naive polynomial
/// multiplication, inverse by exhaustive search).
CensusCounts gen_census(const FiniteQuadraticSpace& v, int m,
                        unsigned long long budget = 100000000ULL);

/// Full isometry listing by filtering the cartesian product of equal-norm
/// candidate columns (candidates from box_roots). Rank cap 5.
std::vector<IMat> group_expand(const IntegerLattice& l, unsigned long cap = 1000000);

/// Orbit of a generatrix under explicit ambient isometries, one application
/// per element, own canonical form for dedup. Elements are reduced to N_0
/// through the context data.
std::vector<Generatrix> orbit_brute(const MarkingContext& ctx, const std::vector<IMat>& elements,
                                    const Generatrix& g);

}  // namespace enriq::oracle
