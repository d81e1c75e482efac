#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriq/isometry.hpp"
#include "enriq/lattice.hpp"

namespace enriq {

struct OverlatticeEntry {
  long sigma_from = 0;
  long sigma_to = 0;
  LatticeEmbedding embedding;  // N_sigma_from into N_sigma_to
};

struct RecordedCounts {
  std::optional<long> tau;
  std::optional<long> epsilon;
  std::optional<long> alpha;
  std::optional<long> epsilon_c;
  std::optional<long> epsilon_c_prev;
};

/// Catalog of marking classes R_sigma and overlattice embedding classes;
/// input data, re-validated on load.
struct EmbeddingCatalog {
  long sigma = 0;
  long p = 3;
  std::vector<LatticeEmbedding> markings;  // gamma_i into N_sigma
  std::vector<OverlatticeEntry> overlattices;
  RecordedCounts recorded;
};

/// Re-verifies every entry: embedding invariants, root-freeness of marking
/// complements, Artin invariants of overlattice endpoints. Throws on
/// failure.
void validate_catalog(const EmbeddingCatalog& catalog);

/// gamma_i ~ gamma_j iff some catalog pair (j, j') with a common target has
/// a root-free composed complement on the first side and an isometry witness
/// identifying the compositions.
Ternary embedding_equivalent(std::size_t i1, std::size_t i2, const EmbeddingCatalog& catalog,
                             const IsometryLimits& limits = {});

struct CensusReport {
  long irreducible = 0;  // |R_sigma|
  long connected = 0;    // |R_sigma / ~|
  bool connected_indeterminate = false;
  long alpha = 0;  // classes whose every lower-sigma' composition keeps a root
  std::optional<long> epsilon_upper;    // tau * |R|
  long epsilon_c_lower = 0;             // alpha
  std::optional<long> epsilon_c_upper;  // tau * (alpha + epsilon_c_prev)
  std::vector<std::string> violations;  // recorded counts breaking a bound
};

CensusReport component_census(const EmbeddingCatalog& catalog, const IsometryLimits& limits = {});

}  // namespace enriq
