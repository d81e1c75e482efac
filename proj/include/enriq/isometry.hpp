#pragma once

#include <optional>
#include <vector>

#include "enriq/lattice.hpp"

namespace enriq {

/// Three-valued answer for capped searches; Indeterminate is a first-class
/// outcome and is never coerced to false.
enum class Ternary { False, True, Indeterminate };

/// Finite isometry data of a lattice: a generating set (or full listing)
/// plus the expansion cap.
struct IsometrySet {
  IntegerLattice lattice;
  std::vector<IMat> generators;
  std::optional<unsigned long> order;
  unsigned long element_cap = 1000000;
};

struct IsometryLimits {
  std::size_t rank_cap = 8;
  unsigned long element_cap = 1000000;
};

/// Full isometry group of a definite lattice by backtracking over images of
/// basis vectors among equal-norm vectors with matching partial inner
/// products. The first level fans out across OpenMP workers; the element
/// list is merged into canonical sorted order.
IsometrySet isometry_group(const IntegerLattice& l, const IsometryLimits& limits = {});

/// Closure of the generators under multiplication, sorted canonically.
/// Throws CapError past element_cap.
std::vector<IMat> expand_group(const IsometrySet& g);

/// Searches the generated group for alpha with alpha . j1 = j2.
Ternary embeddings_isomorphic(const LatticeEmbedding& j1, const LatticeEmbedding& j2,
                              const IsometrySet& group);

}  // namespace enriq
