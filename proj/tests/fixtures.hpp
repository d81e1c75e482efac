#pragma once

// Shared toy fixtures: marked lattices at desk scale exercising the orbit,
// period and census machinery. All values here predate the tests that
// consume them (derived once with the oracle suite, then frozen).

#include <vector>

#include "enriq/catalog.hpp"
#include "enriq/marking.hpp"
#include "enriq/roots.hpp"

namespace enriq::fixtures {

inline IntegerLattice a2a2() { return construct_standard("sum(twist(A2,-1),twist(A2,-1))"); }

/// Diagonal A2(-2) inside A2(-1)+A2(-1); stabilizer = {id, factor swap}.
inline LatticeEmbedding diagonal_marking() {
  IntegerLattice n = a2a2();
  IntegerLattice src = construct_standard("twist(A2,-2)");
  IMat m(4, 2);
  m(0, 0) = 1;
  m(2, 0) = 1;
  m(1, 1) = 1;
  m(3, 1) = 1;
  return make_embedding(src, n, m);
}

/// Same diagonal twisted by a rotation of the second factor; equivalent to
/// diagonal_marking under O(N).
inline LatticeEmbedding twisted_diagonal_marking() {
  IntegerLattice n = a2a2();
  IntegerLattice src = construct_standard("twist(A2,-2)");
  // second-factor rotation r: e3 -> e4, e4 -> -e3-e4
  IMat m(4, 2);
  m(0, 0) = 1;
  m(3, 0) = 1;  // e1 + r(e3) = e1 + e4
  m(1, 1) = 1;
  m(2, 1) = -1;
  m(3, 1) = -1;  // e2 + r(e4) = e2 - e3 - e4
  return make_embedding(src, n, m);
}

/// Rank-3 marking of A2(-1)+A2(-1) whose stabilizer is trivial.
inline LatticeEmbedding rigid_marking() {
  IntegerLattice n = a2a2();
  // u = e1+e3, v = e2+e4, w = e1+2e2
  IMat m(4, 3);
  m(0, 0) = 1;
  m(2, 0) = 1;
  m(1, 1) = 1;
  m(3, 1) = 1;
  m(0, 2) = 1;
  m(1, 2) = 2;
  IMat gram = m.transposed() * n.gram() * m;
  return make_embedding(IntegerLattice(gram), n, m);
}

/// Root marking diag(-2) = <e1> inside A2(-1)+A2(-1).
inline LatticeEmbedding root_marking() {
  IntegerLattice n = a2a2();
  IMat m(4, 1);
  m(0, 0) = 1;
  return make_embedding(construct_standard("diag(-2)"), n, m);
}

/// The two sigma=1 generatrices of the A2+A2 context over F_9.
inline std::vector<Generatrix> toy_generatrices(const MarkingContext& ctx) {
  return enumerate_generatrices(ctx.nzero.space, 2, GenFilter::Characteristic);
}

/// The two O(N)-inequivalent primitive root-free classes of diag(-8,-8)
/// markings of A2(-1)+A2(-1), found by exhaustive orbit search. Both have
/// trivial stabilizer and half of O(diag(-8,-8)) fails to extend.
inline LatticeEmbedding class1_marking() {
  IntegerLattice n = a2a2();
  IMat m(4, 2,
         {-2, -1,  //
          -1, -1,  //
          -1, 1,   //
          -1, 2});
  return make_embedding(construct_standard("diag(-8,-8)"), n, m);
}

inline LatticeEmbedding class2_marking() {
  IntegerLattice n = a2a2();
  IMat m(4, 2,
         {-2, 1,  //
          -1, 0,  //
          -1, -2,  //
          -1, -1});
  return make_embedding(construct_standard("diag(-8,-8)"), n, m);
}

inline IMat factor_swap() {
  IMat s(4, 4);
  s(0, 2) = 1;
  s(1, 3) = 1;
  s(2, 0) = 1;
  s(3, 1) = 1;
  return s;
}

/// Catalog with three markings of a common source; the first two are
/// representatives of one class: irreducible 3, connected 2.
inline EmbeddingCatalog catalog_three_markings() {
  EmbeddingCatalog cat;
  cat.sigma = 1;
  cat.p = 3;
  LatticeEmbedding g1 = class1_marking();
  cat.markings.push_back(g1);
  cat.markings.push_back(make_embedding(g1.source, g1.target, factor_swap() * g1.matrix));
  cat.markings.push_back(class2_marking());
  cat.overlattices.push_back(OverlatticeEntry{1, 1, identity_embedding(a2a2())});
  return cat;
}

/// Catalog whose classes are pairwise inequivalent: alpha = |R| (no
/// lower-sigma entries), connected = |R|.
inline EmbeddingCatalog catalog_distinct_classes() {
  EmbeddingCatalog cat = catalog_three_markings();
  cat.markings.erase(cat.markings.begin() + 1);  // drop the redundant listing
  return cat;
}

inline EmbeddingCatalog catalog_empty(long sigma) {
  EmbeddingCatalog cat;
  cat.sigma = sigma;
  cat.p = 3;
  return cat;
}

/// Deterministic unimodular base change of the ambient; transports an
/// embedding to the new coordinates.
inline LatticeEmbedding rebase(const LatticeEmbedding& e, const IMat& s) {
  IntegerLattice n2(s.transposed() * e.target.gram() * s);
  return make_embedding(e.source, n2, inverse_unimodular(s) * e.matrix);
}

}  // namespace enriq::fixtures
