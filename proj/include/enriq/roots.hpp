#pragma once

#include <vector>

#include "enriq/lattice.hpp"

namespace enriq {

/// All v with <v,v> = t in a negative definite lattice (both v and -v),
/// sorted lexicographically on coordinates. Exact rational Cholesky bounds
/// (Fincke-Pohst); the top recursion level fans out across OpenMP workers
/// and results are merged into the canonical order, so output is
/// deterministic regardless of parallelism.
std::vector<IMat> enumerate_norm_vectors(const IntegerLattice& l, const Int& t);

bool has_minus_two_root(const IntegerLattice& l);

/// s_l : x -> x + <x,l> l for a root l (<l,l> = -2); an isometry of order 2
/// fixing l-perp pointwise and negating l.
IMat reflection_in_root(const IntegerLattice& l, const IMat& root);

}  // namespace enriq
