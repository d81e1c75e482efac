#include "enriq/generatrix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace enriq {

Subspace make_subspace(FiniteQuadraticSpace space, int m, FqMat rows) {
  if (rows.rows > 0 && rows.cols != space.dim())
    throw Error("subspace: basis width differs from ambient dimension");
  if (rows.rows == 0) rows = FqMat(0, space.dim());
  const FqTower& k = tower_for(space.p, m);
  for (Fq v : rows.data)
    if (static_cast<std::uint64_t>(v) >= k.q()) throw Error("subspace: entry outside the field");
  fq_rref(k, rows, true);
  return Subspace{std::move(space), m, std::move(rows)};
}

Subspace frobenius_image(const Subspace& g) {
  const FqTower& k = tower_for(g.space.p, g.m);
  FqMat b = fq_frobenius(k, g.basis);
  fq_rref(k, b, true);
  return Subspace{g.space, g.m, std::move(b)};
}

Subspace frobenius_preimage(const Subspace& g) {
  const FqTower& k = tower_for(g.space.p, g.m);
  FqMat b = fq_frobenius_inv(k, g.basis);
  fq_rref(k, b, true);
  return Subspace{g.space, g.m, std::move(b)};
}

bool is_totally_isotropic(const Subspace& g) {
  const FqTower& k = tower_for(g.space.p, g.m);
  FqMat gram = gram_in_tower(k, g.space);
  FqMat prod = fq_mul(k, fq_mul(k, g.basis, gram), fq_transpose(g.basis));
  for (Fq v : prod.data)
    if (v != 0) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (!(a.space == b.space) || a.m != b.m) throw Error("subspace_sum: ambient mismatch");
  const FqTower& k = tower_for(a.space.p, a.m);
  FqMat s = fq_stack(a.basis, b.basis);
  fq_rref(k, s, true);
  return Subspace{a.space, a.m, std::move(s)};
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (!(a.space == b.space) || a.m != b.m) throw Error("subspace_intersection: ambient mismatch");
  const FqTower& k = tower_for(a.space.p, a.m);
  FqMat i = fq_row_intersection(k, a.basis, b.basis);
  return Subspace{a.space, a.m, std::move(i)};
}

bool is_characteristic(const Subspace& g) {
  const std::size_t dim = g.space.dim();
  if (dim % 2 != 0) throw Error("is_characteristic: odd-dimensional ambient");
  const std::size_t sigma = dim / 2;
  if (g.rank() != sigma) throw Error("is_characteristic: subspace dimension is not sigma");
  if (!is_totally_isotropic(g)) return false;
  Subspace sum = subspace_sum(g, frobenius_image(g));
  return sum.rank() == sigma + 1;
}

bool is_strictly_characteristic(const Subspace& g) {
  if (!is_characteristic(g)) return false;
  const std::size_t dim = g.space.dim();
  Subspace s = g;
  for (std::size_t i = 0; i < 2 * dim && s.rank() < dim; ++i) {
    Subspace next = subspace_sum(s, frobenius_image(s));
    if (next.rank() == s.rank()) break;
    s = std::move(next);
  }
  return s.rank() == dim;
}

Subspace rational_part(const Subspace& g) {
  const FqTower& k = tower_for(g.space.p, g.m);
  const std::size_t n = g.space.dim();
  // Largest phi-stable subspace inside G: intersect the m Frobenius images.
  Subspace w = g;
  Subspace img = g;
  for (int i = 1; i < g.m && w.rank() > 0; ++i) {
    img = frobenius_image(img);
    w = subspace_intersection(w, img);
  }
  if (w.rank() == 0) return Subspace{g.space, g.m, FqMat(0, n)};

  // Solve for phi-fixed vectors of w over F_p: unknowns are the m digits of
  // each coordinate; conditions are membership in w and phi(v) = v.
  const FqTower& kp = tower_for(g.space.p, 1);
  const int m = g.m;
  FqMat ker = fq_right_kernel(k, w.basis);  // rows y with w y^T = 0
  const std::size_t n_conditions = ker.rows * m + n * m;
  FqMat sys(n_conditions, n * m);
  std::size_t row = 0;
  // membership: for each kernel row y, sum_j v_j y_j = 0
  for (std::size_t r = 0; r < ker.rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int l = 0; l < m; ++l) {
        Fq beta = k.encode([&] {
          std::vector<long> c(m, 0);
          c[l] = 1;
          return c;
        }());
        auto digits = k.decode(k.mul(ker.at(r, j), beta));
        for (int d = 0; d < m; ++d)
          sys.at(row + d, j * m + l) = kp.from_base(digits[d]);
      }
    }
    row += m;
  }
  // rationality: frob(v_j) - v_j = 0 for each coordinate
  for (std::size_t j = 0; j < n; ++j) {
    for (int l = 0; l < m; ++l) {
      std::vector<long> c(m, 0);
      c[l] = 1;
      auto digits = k.decode(k.frob(k.encode(c)));
      digits[l] = digits[l] - 1;  // subtract identity
      for (int d = 0; d < m; ++d)
        sys.at(row + d, j * m + l) = kp.from_base(digits[d]);
    }
    row += m;
  }
  FqMat sol = fq_right_kernel(kp, sys);
  FqMat basis(sol.rows, n);
  for (std::size_t r = 0; r < sol.rows; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> digits(m, 0);
      for (int l = 0; l < m; ++l) digits[l] = kp.to_base(sol.at(r, j * m + l));
      basis.at(r, j) = k.encode(digits);
    }
  fq_rref(k, basis, true);
  return Subspace{g.space, g.m, std::move(basis)};
}

long artin_invariant_of_generatrix(const Subspace& g) {
  if (!is_characteristic(g)) throw Error("artin invariant: generatrix is not characteristic");
  return static_cast<long>(g.rank()) - static_cast<long>(rational_part(g).rank());
}

Int gaussian_binomial(std::size_t n, std::size_t k, const Int& q) {
  if (k > n) return 0;
  Rat acc(1);
  for (std::size_t i = 0; i < k; ++i) {
    Int num;
    mpz_pow_ui(num.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    Int den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    acc *= Rat(num - 1) / Rat(den - 1);
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw Error("gaussian binomial: internal error");
  return acc.get_num();
}

namespace {

// Schubert-cell description of one RREF pivot pattern.
struct Cell {
  std::vector<std::size_t> pivots;           // ascending pivot columns
  std::vector<std::pair<int, int>> free_at;  // (row, col) free positions
};

std::vector<Cell> rref_cells(std::size_t n, std::size_t k) {
  std::vector<Cell> cells;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    Cell cell;
    cell.pivots = comb;
    std::vector<bool> is_pivot(n, false);
    for (auto c : comb) is_pivot[c] = true;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = comb[r] + 1; c < n; ++c)
        if (!is_pivot[c]) cell.free_at.emplace_back(static_cast<int>(r), static_cast<int>(c));
    cells.push_back(std::move(cell));
    // next combination in lexicographic order
    std::size_t i = k;
    while (i-- > 0) {
      if (comb[i] + (k - i) < n) {
        ++comb[i];
        for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return cells;
    }
    if (k == 0) return cells;
  }
}

FqMat cell_matrix(const Cell& cell, std::size_t n, std::size_t k, std::uint64_t index,
                  std::uint64_t q) {
  FqMat mat(k, n);
  for (std::size_t r = 0; r < k; ++r) mat.at(r, cell.pivots[r]) = 1;
  for (const auto& [r, c] : cell.free_at) {
    mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
        static_cast<Fq>(index % q);
    index /= q;
  }
  return mat;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const FiniteQuadraticSpace& v, int m, std::size_t k,
                                          const std::function<bool(const Subspace&)>& keep,
                                          const EnumLimits& limits) {
  const std::size_t n = v.dim();
  if (k > n) return {};
  const FqTower& tower = tower_for(v.p, m);
  Int total = gaussian_binomial(n, k, Int(static_cast<long>(tower.q())));
  if (total > Int(static_cast<unsigned long>(limits.grassmannian_budget)))
    throw CapError("subspace enumeration budget exceeded: " + total.get_str() +
                   " candidate subspaces");
  if (k == 0) {
    Subspace zero{v, m, FqMat(0, n)};
    return keep(zero) ? std::vector<Subspace>{zero} : std::vector<Subspace>{};
  }

  auto cells = rref_cells(n, k);
  std::vector<Subspace> out;
  const std::uint64_t q = tower.q();
  for (const auto& cell : cells) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cell.free_at.size(); ++i) count *= q;
    std::vector<std::vector<Subspace>> found;
#ifdef _OPENMP
    const int blocks = std::min<std::uint64_t>(count, 64);
#else
    const int blocks = 1;
#endif
    found.resize(blocks);
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < blocks; ++b) {
      std::uint64_t lo = count / blocks * b + std::min<std::uint64_t>(b, count % blocks);
      std::uint64_t hi = lo + count / blocks + (static_cast<std::uint64_t>(b) < count % blocks ? 1 : 0);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        Subspace s{v, m, cell_matrix(cell, n, k, idx, q)};
        if (keep(s)) found[b].push_back(std::move(s));
      }
    }
    for (auto& block : found)
      for (auto& s : block) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_generatrices(const FiniteQuadraticSpace& v, int m, GenFilter filter,
                                             const EnumLimits& limits) {
  if (v.dim() % 2 != 0) throw Error("enumerate_generatrices: odd-dimensional ambient");
  const std::size_t sigma = v.dim() / 2;
  switch (filter) {
    case GenFilter::Isotropic:
      return enumerate_subspaces(v, m, sigma, [](const Subspace& s) { return is_totally_isotropic(s); },
                                 limits);
    case GenFilter::Characteristic:
      return enumerate_subspaces(v, m, sigma, [](const Subspace& s) { return is_characteristic(s); },
                                 limits);
    case GenFilter::Strict:
      return enumerate_subspaces(
          v, m, sigma, [](const Subspace& s) { return is_strictly_characteristic(s); }, limits);
  }
  throw Error("enumerate_generatrices: unknown filter");
}

ChainResult chain_vector(const Subspace& g) {
  if (!is_strictly_characteristic(g))
    throw Error("chain_vector: generatrix is not strictly characteristic");
  const FqTower& k = tower_for(g.space.p, g.m);
  const std::size_t sigma = g.rank();
  const std::size_t n = g.space.dim();
  Subspace line = g;
  Subspace pre = g;
  for (std::size_t i = 1; i < sigma; ++i) {
    pre = frobenius_preimage(pre);
    line = subspace_intersection(line, pre);
  }
  if (line.rank() != 1)
    throw Error("chain_vector: intersection of Frobenius preimages is not a line");
  // RREF already normalizes the leading coordinate to 1.
  FqMat x0(1, n);
  for (std::size_t j = 0; j < n; ++j) x0.at(0, j) = line.basis.at(0, j);

  FqMat translates(2 * sigma, n);
  FqMat cur = x0;
  for (std::size_t i = 0; i < 2 * sigma; ++i) {
    for (std::size_t j = 0; j < n; ++j) translates.at(i, j) = cur.at(0, j);
    cur = fq_frobenius(k, cur);
  }
  if (fq_rank(k, translates) != 2 * sigma)
    throw Error("chain_vector: Frobenius translates of x0 are not a basis (enlarge m)");

  FqMat chain(sigma, n);
  for (std::size_t i = 0; i < sigma; ++i)
    for (std::size_t j = 0; j < n; ++j) chain.at(i, j) = translates.at(i, j);

  // Pairing pattern between the chain of G and its sigma-th Frobenius shift:
  // <F^sigma(x_i), x_j> != 0 iff i = j. (For i < sigma-1 the unshifted
  // F(x_i) lies inside the isotropic G, so the shifted form is the one that
  // can hold; at sigma = 1 the two coincide.)
  FqMat gram = gram_in_tower(k, g.space);
  for (std::size_t i = 0; i < sigma; ++i)
    for (std::size_t j = 0; j < sigma; ++j) {
      Fq acc = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          acc = k.add(acc,
                      k.mul(k.mul(translates.at(sigma + i, a), gram.at(a, b)), translates.at(j, b)));
      if ((acc != 0) != (i == j))
        throw Error("chain_vector: pairing pattern violated at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  return ChainResult{std::move(chain), std::move(translates)};
}

}  // namespace enriq
