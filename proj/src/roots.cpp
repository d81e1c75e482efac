#include "enriq/roots.hpp"

#include <algorithm>

namespace enriq {

namespace {

struct Cholesky {
  std::size_t n = 0;
  QMat q;  // q(i,i) positive diagonal, q(i,j) for j > i the mu coefficients
};

// A = -gram must be positive definite; throws otherwise.
Cholesky decompose(const IntegerLattice& l) {
  const std::size_t n = l.rank();
  Cholesky ch;
  ch.n = n;
  ch.q = QMat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ch.q(i, j) = Rat(-l.gram()(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(ch.q(i, i)) <= 0) throw Error("enumerate_norm_vectors: lattice is not negative definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat mu = ch.q(i, j) / ch.q(i, i);
      for (std::size_t k = j; k < n; ++k) ch.q(j, k) -= mu * ch.q(i, k);
      ch.q(i, j) = mu;
    }
  }
  return ch;
}

// Depth-first over coordinates x[level], level descending from n-1. partial
// holds sum_{i>level} q_ii (x_i + U_i)^2; shifts[i] = sum_{j>i} q_ij x_j for
// the currently fixed tail.
void descend(const Cholesky& ch, const Rat& bound, std::size_t level, std::vector<Int>& x,
             std::vector<Rat>& shifts, const Rat& partial, std::vector<std::vector<Int>>& out) {
  const Rat& qi = ch.q(level, level);
  Rat slack = (bound - partial) / qi;
  if (sgn(slack) < 0) return;
  Int radius = floor_sqrt(slack);
  const Rat& center = shifts[level];
  Int lo = ceil_rat(-center - Rat(radius)) - 1;
  Int hi = floor_rat(-center + Rat(radius)) + 1;
  for (Int v = lo; v <= hi; ++v) {
    Rat term = qi * (Rat(v) + center) * (Rat(v) + center);
    Rat acc = partial + term;
    if (acc > bound) continue;
    x[level] = v;
    if (level == 0) {
      if (acc == bound) {
        std::vector<Int> vec(ch.n);
        for (std::size_t i = 0; i < ch.n; ++i) vec[i] = x[i];
        out.push_back(std::move(vec));
      }
      continue;
    }
    for (std::size_t i = 0; i < level; ++i) shifts[i] += ch.q(i, level) * Rat(v);
    descend(ch, bound, level - 1, x, shifts, acc, out);
    for (std::size_t i = 0; i < level; ++i) shifts[i] -= ch.q(i, level) * Rat(v);
  }
}

}  // namespace

std::vector<IMat> enumerate_norm_vectors(const IntegerLattice& l, const Int& t) {
  if (t >= 0) throw Error("enumerate_norm_vectors: target norm must be negative");
  const std::size_t n = l.rank();
  if (n == 0) return {};
  Cholesky ch = decompose(l);
  const Rat bound(-t);

  std::vector<std::vector<Int>> collected;
  const std::size_t top = n - 1;
  Rat slack = bound / ch.q(top, top);
  Int radius = floor_sqrt(slack);
  Int lo = -radius - 1, hi = radius + 1;
  long span = to_long(hi - lo + 1);
  std::vector<std::vector<std::vector<Int>>> per_top(static_cast<std::size_t>(span));
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < span; ++k) {
    Int v = lo + k;
    Rat term = ch.q(top, top) * Rat(v) * Rat(v);
    if (term > bound) continue;
    std::vector<Int> x(n);
    x[top] = v;
    std::vector<Rat> shifts(n);
    for (std::size_t i = 0; i < top; ++i) shifts[i] = ch.q(i, top) * Rat(v);
    if (top == 0) {
      if (term == bound) per_top[k].push_back({v});
    } else {
      descend(ch, bound, top - 1, x, shifts, term, per_top[k]);
    }
  }
  for (auto& block : per_top)
    for (auto& vec : block) collected.push_back(std::move(vec));

  std::vector<IMat> out;
  out.reserve(collected.size());
  for (const auto& vec : collected) {
    IMat col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = vec[i];
    out.push_back(std::move(col));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_minus_two_root(const IntegerLattice& l) {
  if (l.rank() == 0) return false;
  return !enumerate_norm_vectors(l, Int(-2)).empty();
}

IMat reflection_in_root(const IntegerLattice& l, const IMat& root) {
  if (root.rows() != l.rank() || root.cols() != 1)
    throw Error("reflection_in_root: vector shape mismatch");
  if (l.inner(root, root) != -2) throw Error("reflection_in_root: vector is not a root");
  // s_l(e_i) = e_i + <e_i, l> l, so S = I + l (G l)^T.
  IMat gl = l.gram() * root;
  IMat s = IMat::identity(l.rank()) + root * gl.transposed();
  return s;
}

}  // namespace enriq
