#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "enriq/numeric.hpp"

namespace enriq {

/// Dense matrix with value semantics over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols) throw Error("matrix initializer size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix diff shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Shape-major, then row-major entry order. Canonical sort order for
  /// deterministic output.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
    }
    return false;
  }

  Matrix col(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (v != T(0)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IMat = Matrix<Int>;
using QMat = Matrix<Rat>;

QMat to_rational(const IMat& m);
/// Fails with Error unless every entry is integral.
IMat to_integral(const QMat& m);
bool is_integral(const QMat& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(const IMat& m);

/// Canonical row-style Hermite normal form: pivots positive, entries above a
/// pivot reduced into [0, pivot), zero rows trailing. Unique for the row
/// lattice.
IMat hnf_rows(IMat a);
/// Also returns unimodular U with U * input = H.
std::pair<IMat, IMat> hnf_rows_transform(IMat a);

/// Basis of {x : a x = 0} as matrix columns, HNF-canonical. The integer
/// kernel is automatically saturated.
IMat kernel_columns(const IMat& a);

struct SmithResult {
  std::vector<Int> divisors;  // ascending divisibility chain, zeros trailing
  IMat u, v;                  // u * input * v = diag(divisors)
};
SmithResult smith_normal_form(IMat a);

struct Signature {
  long n_plus = 0;
  long n_minus = 0;
};
/// Sylvester signature of a nondegenerate symmetric integer matrix, by exact
/// congruent diagonalization over the rationals.
Signature signature_of(const IMat& gram);

/// Solves a x = b over the rationals (general shape, consistency checked).
std::optional<QMat> solve_rational(const QMat& a, const QMat& b);
QMat inverse_rational(const QMat& a);
/// Inverse of a unimodular integer matrix, as an integer matrix.
IMat inverse_unimodular(const IMat& a);

/// HNF-canonical basis of the column lattice spanned by b (zero columns of
/// the canonical form dropped).
IMat canonical_column_basis(const IMat& b);

}  // namespace enriq
