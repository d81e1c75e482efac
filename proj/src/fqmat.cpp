#include "enriq/fqmat.hpp"

#include <algorithm>

namespace enriq {

FqMat fq_identity(const FqTower& k, std::size_t n) {
  FqMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

FqMat fq_mul(const FqTower& k, const FqMat& a, const FqMat& b) {
  if (a.cols != b.rows) throw Error("fq_mul: shape mismatch");
  FqMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t t = 0; t < a.cols; ++t) {
      Fq v = a.at(i, t);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = k.add(c.at(i, j), k.mul(v, b.at(t, j)));
    }
  return c;
}

FqMat fq_transpose(const FqMat& a) {
  FqMat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

FqMat fq_frobenius(const FqTower& k, const FqMat& a) {
  FqMat r = a;
  for (Fq& v : r.data) v = k.frob(v);
  return r;
}

FqMat fq_frobenius_inv(const FqTower& k, const FqMat& a) {
  FqMat r = a;
  for (Fq& v : r.data) v = k.frob_inv(v);
  return r;
}

std::size_t fq_rref(const FqTower& k, FqMat& a, bool trim) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = a.rows;
    for (std::size_t i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == a.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
    Fq inv = k.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) = k.mul(inv, a.at(r, j));
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r) continue;
      Fq f = a.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < a.cols; ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(r, j)));
    }
    ++r;
  }
  if (trim && r < a.rows) {
    a.data.resize(r * a.cols);
    a.rows = r;
  }
  return r;
}

FqMat fq_row_space(const FqTower& k, FqMat a) {
  fq_rref(k, a, true);
  return a;
}

std::size_t fq_rank(const FqTower& k, FqMat a) { return fq_rref(k, a, false); }

FqMat fq_stack(const FqMat& a, const FqMat& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw Error("fq_stack: width mismatch");
  FqMat s(a.rows + b.rows, a.rows ? a.cols : b.cols);
  std::copy(a.data.begin(), a.data.end(), s.data.begin());
  std::copy(b.data.begin(), b.data.end(), s.data.begin() + a.data.size());
  return s;
}

FqMat fq_right_kernel(const FqTower& k, const FqMat& a) {
  FqMat r = a;
  std::size_t rank = fq_rref(k, r, true);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(a.cols, false);
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      while (c < a.cols && r.at(i, c) == 0) ++c;
      pivots.push_back(c);
      is_pivot[c] = true;
    }
  }
  FqMat ker(a.cols - rank, a.cols);
  std::size_t row = 0;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    ker.at(row, free) = k.one();
    for (std::size_t i = 0; i < rank; ++i)
      ker.at(row, pivots[i]) = k.neg(r.at(i, free));
    ++row;
  }
  fq_rref(k, ker, true);
  return ker;
}

FqMat fq_row_intersection(const FqTower& k, const FqMat& a, const FqMat& b) {
  if (a.cols != b.cols) throw Error("fq_row_intersection: width mismatch");
  const std::size_t n = a.cols;
  // Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry the
  // intersection in the right half.
  FqMat w(a.rows + b.rows, 2 * n);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w.at(i, j) = a.at(i, j);
      w.at(i, n + j) = a.at(i, j);
    }
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) w.at(a.rows + i, j) = b.at(i, j);
  fq_rref(k, w, true);
  FqMat inter(0, n);
  for (std::size_t i = 0; i < w.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (w.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    FqMat row(1, n);
    for (std::size_t j = 0; j < n; ++j) row.at(0, j) = w.at(i, n + j);
    inter = fq_stack(inter, row);
  }
  fq_rref(k, inter, true);
  return inter;
}

bool fq_invertible(const FqTower& k, const FqMat& a) {
  return a.rows == a.cols && fq_rank(k, a) == a.rows;
}

FqMat fq_inverse(const FqTower& k, const FqMat& a) {
  if (a.rows != a.cols) throw Error("fq_inverse: non-square");
  const std::size_t n = a.rows;
  FqMat w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, n + i) = k.one();
  }
  std::size_t rank = fq_rref(k, w, false);
  if (rank != n) throw Error("fq_inverse: singular matrix");
  FqMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = w.at(i, n + j);
  return inv;
}

}  // namespace enriq
