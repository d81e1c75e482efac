#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriq/generatrix.hpp"
#include "enriq/isometry.hpp"
#include "enriq/lattice.hpp"

namespace enriq {

/// A marked ambient lattice: gamma plays the role of a Gamma(2)-marking of
/// N, together with its orthogonal complement K, the pointwise stabilizer
/// O(N, gamma), and the mod-p quotient N_0 the generatrices live in.
struct MarkingContext {
  IntegerLattice ambient;
  long p = 3;
  LatticeEmbedding gamma;
  IntegerLattice complement;
  LatticeEmbedding complement_inclusion;
  IsometrySet complement_group;  // O(K), full listing
  IsometrySet stabilizer;        // O(N, gamma), full listing on N
  DualQuotient nzero;
  long sigma = 0;
  bool genuine_k3 = false;
  std::string id;  // digest of (gram, p, gamma matrix)
};

/// Computes K and O(N, gamma) as the subgroup of O(K) whose
/// extension-by-identity on the image is integral on N.
MarkingContext build_marking_context(const IntegerLattice& n, long p, const LatticeEmbedding& gamma,
                                     const IsometryLimits& limits = {});

struct AdmissibilityReport {
  bool primitive = false;
  bool complement_root_free = false;
  std::optional<bool> sigma_bound_ok;  // evaluated only for genuine K3 lattices
  bool admissible = false;
};
AdmissibilityReport check_enriques_admissible(const MarkingContext& ctx);

/// +id on the image, -id on the complement, expressed on the basis of N.
/// Errors with the offending denominator when the extension is not integral.
IMat induced_involution(const MarkingContext& ctx);

/// Reduction of an ambient isometry to an F_p-linear map on N_0 (columns act
/// on coordinates). Commutes with Frobenius since the entries are rational.
Matrix<long> induced_action_on_nzero(const MarkingContext& ctx, const IMat& phi);

Generatrix act_on_generatrix(const MarkingContext& ctx, const IMat& phi, const Generatrix& g);

/// Partition into stabilizer orbits; orbits sorted by their minima, each
/// orbit sorted. Deterministic.
std::vector<std::vector<Generatrix>> orbit_generatrices(const MarkingContext& ctx,
                                                        const std::vector<Generatrix>& gs);

/// Canonical representative (lexicographic minimum) of the stabilizer orbit
/// of a characteristic generatrix.
struct PeriodPoint {
  std::string context_id;
  Generatrix representative;
  std::size_t orbit_size = 0;
};
PeriodPoint period_point(const MarkingContext& ctx, const Generatrix& g);

bool same_period(const PeriodPoint& a, const PeriodPoint& b);

/// First psi' in the deterministic enumeration of O(K) such that
/// (psi, psi') is integral on N; nullopt when O(K) is exhausted.
std::optional<IMat> extend_isometry(const MarkingContext& ctx, const IMat& psi);

}  // namespace enriq
