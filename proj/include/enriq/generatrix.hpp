#pragma once

#include <functional>
#include <vector>

#include "enriq/finite_form.hpp"

namespace enriq {

/// Subspace of V tensor F_{p^m}, held as the canonical RREF row basis.
/// A generatrix is the same data with rank dim(V)/2; the predicate
/// functions below enforce the dimension where it matters.
struct Subspace {
  FiniteQuadraticSpace space;
  int m = 1;
  FqMat basis;  // RREF rows, width space.dim()

  std::size_t rank() const { return basis.rows; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.space == b.space && a.m == b.m && a.basis == b.basis;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis < b.basis; }
};

using Generatrix = Subspace;

/// Canonicalizes the given rows via RREF; validates shape.
Subspace make_subspace(FiniteQuadraticSpace space, int m, FqMat rows);

Subspace frobenius_image(const Subspace& g);
Subspace frobenius_preimage(const Subspace& g);

bool is_totally_isotropic(const Subspace& g);

/// Sum of row spaces (canonical).
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// G totally isotropic of dimension sigma = dim(V)/2 with
/// dim(G + phi G) = sigma + 1. Requires even-dimensional nondegenerate
/// ambient; neutrality of the ambient is the caller's concern and is
/// reported by is_neutral, not assumed here.
bool is_characteristic(const Subspace& g);

/// Characteristic, and the Frobenius translates of G span the whole space.
bool is_strictly_characteristic(const Subspace& g);

/// Largest F_p-rational subspace of G (the fixed part of Frobenius),
/// returned with entries in the prime field.
Subspace rational_part(const Subspace& g);

/// sigma(G) = sigma - dim rational_part(G). Errors unless G is
/// characteristic.
long artin_invariant_of_generatrix(const Subspace& g);

enum class GenFilter { Isotropic, Characteristic, Strict };

struct EnumLimits {
  unsigned long long grassmannian_budget = 100000000ULL;
};

/// All k-dimensional subspaces of V tensor F_{p^m} passing the predicate, as
/// canonical RREF matrices in lexicographic order. Deterministic regardless
/// of internal parallelism.
std::vector<Subspace> enumerate_subspaces(const FiniteQuadraticSpace& v, int m, std::size_t k,
                                          const std::function<bool(const Subspace&)>& keep,
                                          const EnumLimits& limits = {});

/// Middle-dimensional census with the named filter.
std::vector<Subspace> enumerate_generatrices(const FiniteQuadraticSpace& v, int m, GenFilter filter,
                                             const EnumLimits& limits = {});

/// Number of k-subspaces of an n-space over F_q (Gaussian binomial).
Int gaussian_binomial(std::size_t n, std::size_t k, const Int& q);

struct ChainResult {
  FqMat chain;       // rows x_0, F x_0, ..., F^{sigma-1} x_0 (a basis of G)
  FqMat translates;  // rows x_0, ..., F^{2 sigma - 1} x_0 (a basis of V)
};

/// x_0 spans the intersection of F^{-i}(G) for i < sigma, normalized so its
/// first nonzero coordinate is 1. Verifies the translate basis and the
/// pairing pattern <F x_i, x_j> != 0 iff i = j; errors on failure.
ChainResult chain_vector(const Subspace& g);

}  // namespace enriq
