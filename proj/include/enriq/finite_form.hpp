#pragma once

#include "enriq/fqmat.hpp"
#include "enriq/intmat.hpp"

namespace enriq {

/// Symmetric bilinear form over F_p (p odd), entries reduced into [0, p).
struct FiniteQuadraticSpace {
  long p = 3;
  Matrix<long> gram;

  std::size_t dim() const { return gram.rows(); }

  friend bool operator==(const FiniteQuadraticSpace& a, const FiniteQuadraticSpace& b) {
    return a.p == b.p && a.gram == b.gram;
  }
};

/// Validates symmetry and reduces entries mod p.
FiniteQuadraticSpace make_space(long p, Matrix<long> gram);

long det_mod_p(const FiniteQuadraticSpace& v);
bool is_square_mod_p(long v, long p);

bool is_nondegenerate(const FiniteQuadraticSpace& v);

/// True iff a middle-dimensional totally isotropic subspace exists.
/// Discriminant criterion (neutral iff (-1)^sigma det is a square mod p);
/// cross-checked against exhaustive subspace search in dimension <= 4.
bool is_neutral(const FiniteQuadraticSpace& v);

/// The form's gram matrix lifted into a tower over the same p.
FqMat gram_in_tower(const FqTower& k, const FiniteQuadraticSpace& v);

/// Canonical non-neutral form of the given even dimension over F_p:
/// diag(1, ..., 1, a) with the smallest a in [1, p) making the form
/// non-neutral.
FiniteQuadraticSpace nonneutral_form(long p, std::size_t dim);

/// All isometries of the form with entries in F_p, by backtracking over
/// images of basis vectors; canonical order. These are exactly the
/// isometries of V tensor F_{p^m} that commute with Frobenius.
std::vector<FqMat> form_isometries(const FiniteQuadraticSpace& v);

}  // namespace enriq
