#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enriq/finite_form.hpp"
#include "enriq/generatrix.hpp"
#include "enriq/intmat.hpp"

namespace enriq {

/// Finite-rank nondegenerate symmetric bilinear form over Z. Vectors are
/// integer coordinate columns in the defining basis.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  explicit IntegerLattice(IMat gram, std::string label = "");

  std::size_t rank() const { return gram_.rows(); }
  const IMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }

  /// Even iff every diagonal entry is even (gram symmetric integral).
  bool is_even() const;

  Int inner(const IMat& x, const IMat& y) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IMat gram_{0, 0};
  std::string label_;
};

/// Form-compatible injection; columns of matrix are the images of the source
/// basis.
struct LatticeEmbedding {
  IntegerLattice source;
  IntegerLattice target;
  IMat matrix;
};

/// Validates matrix^T G_target matrix = G_source.
LatticeEmbedding make_embedding(IntegerLattice source, IntegerLattice target, IMat matrix);
LatticeEmbedding identity_embedding(const IntegerLattice& l);

struct DiscriminantData {
  std::vector<Int> elementary_divisors;  // full divisor chain d_1 | d_2 | ...
  Int group_order;
  bool p_elementary = false;
  long p_length = 0;
};

/// Lattice expression grammar:
///   U | A1 | A2 | D4 | E8 | diag(i1,...,ik) | twist(expr, n) | sum(expr, expr)
/// Basis conventions are fixed: U = [[0,1],[1,0]]; A1, A2, D4, E8 are the
/// standard (positive) Cartan matrices with Bourbaki node numbering, so all
/// Gram matrices here are bit-reproducible.
IntegerLattice construct_standard(const std::string& expr);

Int discriminant(const IntegerLattice& l);
Signature signature(const IntegerLattice& l);
DiscriminantData discriminant_data(const IntegerLattice& l, long p);

struct ArtinResult {
  long sigma = 0;
  bool genuine_k3 = false;  // rank 22, signature (1,21), d = -p^(2 sigma)
};
ArtinResult artin_invariant(const IntegerLattice& l, long p);

/// N_0 = pN^v / pN with the pairing <x,y>/p mod p, plus the data needed to
/// transport lattice isometries to N_0.
struct DualQuotient {
  FiniteQuadraticSpace space;
  bool neutral = false;  // computed, never assumed
  IMat basis;            // rank x 2sigma; columns are representatives in N
  IMat v_inv;            // inverse of the full SNF column transform
  std::vector<std::size_t> p_positions;
};
DualQuotient dual_quotient_form(const IntegerLattice& l, long p);

/// Sublattice {x in target : <x, image> = 0} with its induced form and
/// inclusion. The basis is HNF-canonical; the complement may have rank 0.
std::pair<IntegerLattice, LatticeEmbedding> orthogonal_complement(const LatticeEmbedding& emb);

/// Saturation of the image: rational span intersected with the target,
/// HNF-canonical basis. Idempotent.
LatticeEmbedding saturate(const LatticeEmbedding& emb);
Int saturation_index(const LatticeEmbedding& emb);
bool is_primitive(const LatticeEmbedding& emb);

/// j after gamma; requires source of j to equal the target of gamma.
LatticeEmbedding compose_embeddings(const LatticeEmbedding& j, const LatticeEmbedding& gamma);

struct Overlattice {
  IntegerLattice lattice;
  LatticeEmbedding inclusion;  // original lattice into the overlattice
};

/// N(s) = L + (1/p) {v in pL^v : v mod pL in Lambda}. Lambda must be a
/// totally isotropic subspace of dual_quotient_form(L, p) with entries in the
/// prime field. disc drops by p^(2 dim Lambda); the result stays even.
Overlattice overlattice_from_glue(const IntegerLattice& l, long p, const Subspace& lambda);

}  // namespace enriq
