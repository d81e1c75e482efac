#include "enriq/finite_form.hpp"

#include "enriq/generatrix.hpp"

#include <functional>

namespace enriq {

namespace {

long modp(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FiniteQuadraticSpace make_space(long p, Matrix<long> gram) {
  if (p < 3 || p % 2 == 0) throw Error("finite form: p must be an odd prime");
  if (!gram.is_symmetric()) throw Error("finite form: gram not symmetric");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram(i, j) = modp(gram(i, j), p);
  return FiniteQuadraticSpace{p, std::move(gram)};
}

long det_mod_p(const FiniteQuadraticSpace& v) {
  const FqTower& k = tower_for(v.p, 1);
  const std::size_t n = v.dim();
  FqMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = k.from_base(v.gram(i, j));
  // Gaussian elimination, tracking the product of pivots.
  Fq det = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
      det = k.neg(det);
    }
    det = k.mul(det, a.at(c, c));
    Fq inv = k.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Fq f = k.mul(inv, a.at(i, c));
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(c, j)));
    }
  }
  return k.to_base(det);
}

bool is_square_mod_p(long v, long p) {
  v = modp(v, p);
  if (v == 0) return true;
  // Euler criterion
  long r = 1, base = v, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = modp(r * base, p);
    base = modp(base * base, p);
    e >>= 1;
  }
  return r == 1;
}

bool is_nondegenerate(const FiniteQuadraticSpace& v) { return det_mod_p(v) != 0; }

bool is_neutral(const FiniteQuadraticSpace& v) {
  if (v.dim() % 2 != 0) throw Error("is_neutral: odd dimension");
  if (!is_nondegenerate(v)) throw Error("is_neutral: degenerate form");
  const std::size_t sigma = v.dim() / 2;
  if (sigma == 0) return false;  // no sigma-dimensional subspace at all
  long det = det_mod_p(v);
  long sign = (sigma % 2 == 0) ? 1 : -1;
  bool neutral = is_square_mod_p(sign * det, v.p);
  if (v.dim() <= 4) {
    auto found = enumerate_subspaces(v, 1, sigma,
                                     [](const Subspace& s) { return is_totally_isotropic(s); });
    if (neutral != !found.empty())
      throw Error("is_neutral: discriminant criterion disagrees with exhaustive search");
  }
  return neutral;
}

FqMat gram_in_tower(const FqTower& k, const FiniteQuadraticSpace& v) {
  if (k.p() != v.p) throw Error("gram_in_tower: characteristic mismatch");
  FqMat g(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) g.at(i, j) = k.from_base(v.gram(i, j));
  return g;
}

std::vector<FqMat> form_isometries(const FiniteQuadraticSpace& v) {
  const FqTower& k = tower_for(v.p, 1);
  const std::size_t n = v.dim();
  if (n > 6) throw CapError("form_isometries: dimension cap 6 exceeded");
  FqMat gram = gram_in_tower(k, v);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k.q();
  std::vector<std::vector<Fq>> vectors;
  vectors.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    std::vector<Fq> vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      vec[i] = static_cast<Fq>(rest % k.q());
      rest /= k.q();
    }
    vectors.push_back(std::move(vec));
  }
  auto pairing = [&](const std::vector<Fq>& a, const std::vector<Fq>& b) {
    Fq acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        acc = k.add(acc, k.mul(k.mul(a[i], gram.at(i, j)), b[j]));
    }
    return acc;
  };
  std::vector<FqMat> out;
  std::vector<const std::vector<Fq>*> chosen;
  std::function<void()> rec = [&]() {
    std::size_t level = chosen.size();
    if (level == n) {
      FqMat q(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) q.at(r, c) = (*chosen[c])[r];
      out.push_back(std::move(q));
      return;
    }
    for (const auto& vec : vectors) {
      if (pairing(vec, vec) != gram.at(level, level)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < level; ++j)
        if (pairing(vec, *chosen[j]) != gram.at(level, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(&vec);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  return out;
}

FiniteQuadraticSpace nonneutral_form(long p, std::size_t dim) {
  if (dim % 2 != 0 || dim == 0) throw Error("nonneutral_form: dimension must be even, positive");
  for (long a = 1; a < p; ++a) {
    Matrix<long> g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) g(i, i) = 1;
    g(dim - 1, dim - 1) = a;
    auto v = make_space(p, g);
    const std::size_t sigma = dim / 2;
    long sign = (sigma % 2 == 0) ? 1 : -1;
    if (!is_square_mod_p(sign * det_mod_p(v), p)) return v;
  }
  throw Error("nonneutral_form: none found (impossible for p odd)");
}

}  // namespace enriq
