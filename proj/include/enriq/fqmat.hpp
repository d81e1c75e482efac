#pragma once

#include <cstddef>
#include <vector>

#include "enriq/fq.hpp"

namespace enriq {

/// Dense matrix over F_{p^m}. Plain storage; all arithmetic goes through an
/// FqTower so there is no way to mix towers silently.
struct FqMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fq> data;

  FqMat() = default;
  FqMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Fq& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Fq at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const FqMat& a, const FqMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator!=(const FqMat& a, const FqMat& b) { return !(a == b); }
  /// Row-major entry order under the element encoding; the canonical sort
  /// order for subspace lists.
  friend bool operator<(const FqMat& a, const FqMat& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.data < b.data;
  }
};

FqMat fq_identity(const FqTower& k, std::size_t n);
FqMat fq_mul(const FqTower& k, const FqMat& a, const FqMat& b);
FqMat fq_transpose(const FqMat& a);
/// Entrywise Frobenius.
FqMat fq_frobenius(const FqTower& k, const FqMat& a);
FqMat fq_frobenius_inv(const FqTower& k, const FqMat& a);

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// removed when trim is set, making the result the canonical representative
/// of the row space.
std::size_t fq_rref(const FqTower& k, FqMat& a, bool trim = true);

/// Canonical row-space representative: RREF with zero rows dropped.
FqMat fq_row_space(const FqTower& k, FqMat a);

std::size_t fq_rank(const FqTower& k, FqMat a);

/// Stack rows of a and b (same width).
FqMat fq_stack(const FqMat& a, const FqMat& b);

/// Basis of the right kernel {x : a x = 0} as matrix rows, canonical RREF.
FqMat fq_right_kernel(const FqTower& k, const FqMat& a);

/// Intersection of two row spaces (Zassenhaus), canonical RREF.
FqMat fq_row_intersection(const FqTower& k, const FqMat& a, const FqMat& b);

bool fq_invertible(const FqTower& k, const FqMat& a);
FqMat fq_inverse(const FqTower& k, const FqMat& a);

}  // namespace enriq
