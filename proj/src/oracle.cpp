#include "enriq/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace enriq::oracle {

namespace {

long modp(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// --- self-contained F_{p^m} arithmetic on coefficient vectors ---

struct NaiveField {
  long p;
  int m;
  std::vector<long> mod;  // monic, degree m, degree-0 first
  std::uint64_t q;

  explicit NaiveField(long p_, int m_) : p(p_), m(m_) {
    mod = smallest_irreducible(p, m);  // shared convention, not shared arithmetic
    q = 1;
    for (int i = 0; i < m; ++i) q *= static_cast<std::uint64_t>(p);
  }

  using El = std::vector<long>;

  El zero() const { return El(m, 0); }
  El one() const {
    El e(m, 0);
    e[0] = 1;
    return e;
  }
  bool is_zero(const El& a) const {
    for (long c : a)
      if (c != 0) return false;
    return true;
  }
  El add(const El& a, const El& b) const {
    El r(m);
    for (int i = 0; i < m; ++i) r[i] = modp(a[i] + b[i], p);
    return r;
  }
  El sub(const El& a, const El& b) const {
    El r(m);
    for (int i = 0; i < m; ++i) r[i] = modp(a[i] - b[i], p);
    return r;
  }
  El mul(const El& a, const El& b) const {
    std::vector<long> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) prod[i + j] = modp(prod[i + j] + a[i] * b[j], p);
    for (int d = 2 * m - 2; d >= m; --d) {
      long c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int k = 0; k < m; ++k) prod[d - m + k] = modp(prod[d - m + k] - c * mod[k], p);
    }
    prod.resize(m);
    return prod;
  }
  El inv(const El& a) const {
    // exhaustive search, deliberately naive
    for (std::uint64_t code = 1; code < q; ++code) {
      El cand = decode(code);
      if (mul(a, cand) == one()) return cand;
    }
    throw Error("oracle field: inverse of zero");
  }
  El frob(const El& a) const {
    El r = one();
    El base = a;
    long e = p;
    El acc = one();
    // a^p by square-and-multiply
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  std::uint64_t encode(const El& a) const {
    std::uint64_t code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + a[i];
    return code;
  }
  El decode(std::uint64_t code) const {
    El a(m, 0);
    for (int i = 0; i < m; ++i) {
      a[i] = static_cast<long>(code % p);
      code /= p;
    }
    return a;
  }
};

using Row = std::vector<NaiveField::El>;
using Mat = std::vector<Row>;

// Own reduced form: forward elimination + back substitution + leading-1.
Mat naive_reduce(const NaiveField& f, Mat rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (!f.is_zero(rows[r][c])) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    NaiveField::El inv = f.inv(rows[rank][c]);
    for (std::size_t j = 0; j < ncols; ++j) rows[rank][j] = f.mul(inv, rows[rank][j]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || f.is_zero(rows[r][c])) continue;
      NaiveField::El factor = rows[r][c];
      for (std::size_t j = 0; j < ncols; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::size_t naive_rank(const NaiveField& f, Mat rows) { return naive_reduce(f, std::move(rows)).size(); }

std::vector<std::uint64_t> pack(const NaiveField& f, const Mat& rows) {
  std::vector<std::uint64_t> key;
  for (const auto& row : rows)
    for (const auto& e : row) key.push_back(f.encode(e));
  return key;
}

NaiveField::El bilinear(const NaiveField& f, const FiniteQuadraticSpace& v, const Row& a,
                        const Row& b) {
  NaiveField::El acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (v.gram(i, j) == 0) continue;
      NaiveField::El g(f.m, 0);
      g[0] = v.gram(i, j);
      acc = f.add(acc, f.mul(f.mul(a[i], g), b[j]));
    }
  }
  return acc;
}

bool naive_isotropic(const NaiveField& f, const FiniteQuadraticSpace& v, const Mat& rows) {
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (!f.is_zero(bilinear(f, v, a, b))) return false;
  return true;
}

Mat naive_frob(const NaiveField& f, const Mat& rows) {
  Mat r = rows;
  for (auto& row : r)
    for (auto& e : row) e = f.frob(e);
  return r;
}

Mat stack(const Mat& a, const Mat& b) {
  Mat s = a;
  s.insert(s.end(), b.begin(), b.end());
  return s;
}

bool naive_characteristic(const NaiveField& f, const FiniteQuadraticSpace& v, const Mat& rows) {
  const std::size_t sigma = v.dim() / 2;
  if (rows.size() != sigma) return false;
  if (!naive_isotropic(f, v, rows)) return false;
  return naive_rank(f, stack(rows, naive_frob(f, rows))) == sigma + 1;
}

bool naive_strict(const NaiveField& f, const FiniteQuadraticSpace& v, const Mat& rows) {
  if (!naive_characteristic(f, v, rows)) return false;
  Mat acc = naive_reduce(f, rows);
  for (std::size_t i = 0; i < 2 * v.dim(); ++i) {
    Mat next = naive_reduce(f, stack(acc, naive_frob(f, acc)));
    if (next.size() == acc.size()) break;
    acc = next;
  }
  return acc.size() == v.dim();
}

// All projective lines of F_q^n: representatives with first nonzero
// coordinate equal to 1, enumerated in code order.
std::vector<Row> projective_lines(const NaiveField& f, std::size_t n) {
  std::vector<Row> lines;
  std::vector<std::uint64_t> codes(n, 0);
  const std::uint64_t q = f.q;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    Row row(n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = f.decode(rest % q);
      rest /= q;
    }
    // keep only normalized representatives
    std::size_t lead = 0;
    while (lead < n && f.is_zero(row[lead])) ++lead;
    if (lead == n) continue;
    if (!(row[lead] == f.one())) continue;
    lines.push_back(std::move(row));
  }
  return lines;
}

// Subspace enumeration as spans of tuples of lines; k <= 2.
template <typename Fn>
void scan_subspaces(const NaiveField& f, std::size_t n, std::size_t k, Fn&& visit) {
  if (k == 0) {
    visit(Mat{});
    return;
  }
  auto lines = projective_lines(f, n);
  if (k == 1) {
    for (const auto& l : lines) visit(Mat{l});
    return;
  }
  if (k != 2) throw CapError("oracle subspace scan supports dimension <= 2");
  std::set<std::vector<std::uint64_t>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Mat rows{lines[i], lines[j]};
      Mat red = naive_reduce(f, rows);
      if (red.size() != 2) continue;
      if (!seen.insert(pack(f, red)).second) continue;
      visit(red);
    }
}

}  // namespace

std::vector<IMat> box_roots(const IntegerLattice& l, const Int& t) {
  if (t >= 0) throw Error("box_roots: target norm must be negative");
  const std::size_t n = l.rank();
  if (n == 0) return {};
  auto sig = signature_of(l.gram());
  if (sig.n_plus != 0) throw Error("box_roots: lattice is not negative definite");
  // |x_i| <= sqrt((A^{-1})_ii * |t|) for A = -G positive definite.
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(-l.gram()(i, j));
  QMat ainv = inverse_rational(a);
  std::vector<Int> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = floor_sqrt(ainv(i, i) * Rat(-t));

  // Machine-word evaluation when the scan provably cannot overflow; the
  // scan itself stays the same full-box sweep either way.
  Int width(0), gmax(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] > width) width = bound[i];
    for (std::size_t j = 0; j < n; ++j)
      if (abs(l.gram()(i, j)) > gmax) gmax = abs(l.gram()(i, j));
  }
  bool narrow = t.fits_slong_p() &&
                Int(n) * Int(n) * width * width * gmax < Int("2000000000000000000");

  std::vector<IMat> out;
  if (narrow) {
    std::vector<long> b(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = to_long(bound[i]);
      x[i] = -b[i];
    }
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = to_long(l.gram()(i, j));
    const long target = to_long(t);
    for (;;) {
      long norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        long row = 0;
        for (std::size_t j = 0; j < n; ++j) row += g[i][j] * x[j];
        norm += row * x[i];
      }
      if (norm == target) {
        IMat col(n, 1);
        for (std::size_t i = 0; i < n; ++i) col(i, 0) = x[i];
        out.push_back(std::move(col));
      }
      std::size_t k = 0;
      while (k < n && x[k] == b[k]) {
        x[k] = -b[k];
        ++k;
      }
      if (k == n) break;
      ++x[k];
    }
  } else {
    std::vector<Int> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
    for (;;) {
      IMat col(n, 1);
      for (std::size_t i = 0; i < n; ++i) col(i, 0) = x[i];
      if (l.inner(col, col) == t) out.push_back(col);
      std::size_t k = 0;
      while (k < n && x[k] == bound[k]) {
        x[k] = -bound[k];
        ++k;
      }
      if (k == n) break;
      ++x[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matrix<long>> iso_subspaces(const FiniteQuadraticSpace& v, std::size_t k) {
  NaiveField f(v.p, 1);
  std::vector<Matrix<long>> out;
  scan_subspaces(f, v.dim(), k, [&](const Mat& rows) {
    if (!naive_isotropic(f, v, rows)) return;
    Matrix<long> m(rows.size(), v.dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = rows[i][j][0];
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end(), [](const Matrix<long>& a, const Matrix<long>& b) { return a < b; });
  return out;
}

CensusCounts gen_census(const FiniteQuadraticSpace& v, int m, unsigned long long budget) {
  if (v.dim() % 2 != 0) throw Error("gen_census: odd-dimensional ambient");
  NaiveField f(v.p, m);
  Int total = gaussian_binomial(v.dim(), v.dim() / 2, Int(static_cast<long>(f.q)));
  if (total > Int(static_cast<unsigned long>(budget)))
    throw CapError("gen_census: budget exceeded");
  CensusCounts counts;
  scan_subspaces(f, v.dim(), v.dim() / 2, [&](const Mat& rows) {
    ++counts.total;
    if (!naive_isotropic(f, v, rows)) return;
    ++counts.isotropic;
    if (!naive_characteristic(f, v, rows)) return;
    ++counts.characteristic;
    if (naive_strict(f, v, rows)) ++counts.strict;
  });
  return counts;
}

std::vector<IMat> group_expand(const IntegerLattice& l, unsigned long cap) {
  const std::size_t n = l.rank();
  if (n == 0) return {IMat(0, 0)};
  if (n > 5) throw CapError("oracle group_expand: rank cap 5 exceeded");
  auto sig = signature_of(l.gram());
  if (sig.n_plus != 0 && sig.n_minus != 0) throw Error("oracle group_expand: indefinite lattice");
  IMat gram = l.gram();
  if (sig.n_minus == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram(i, j) = -gram(i, j);
  }
  IntegerLattice work(gram);
  std::map<Int, std::vector<IMat>> by_norm;
  for (std::size_t i = 0; i < n; ++i) {
    Int t = work.gram()(i, i);
    if (!by_norm.count(t)) by_norm[t] = box_roots(work, t);
  }
  // cartesian product of candidate columns, filter Q^T G Q = G
  std::vector<std::size_t> idx(n, 0);
  std::vector<IMat> out;
  unsigned long long scanned = 0;
  for (;;) {
    IMat q(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const IMat& v = by_norm[work.gram()(c, c)][idx[c]];
      for (std::size_t r = 0; r < n; ++r) q(r, c) = v(r, 0);
    }
    if (q.transposed() * work.gram() * q == work.gram()) {
      out.push_back(q);
      if (out.size() > cap) throw CapError("oracle group_expand: element cap exceeded");
    }
    if (++scanned > 50000000ULL) throw CapError("oracle group_expand: scan budget exceeded");
    std::size_t k = 0;
    while (k < n && idx[k] + 1 == by_norm[work.gram()(k, k)].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++idx[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generatrix> orbit_brute(const MarkingContext& ctx, const std::vector<IMat>& elements,
                                    const Generatrix& g) {
  std::set<Generatrix> orbit;
  orbit.insert(g);
  for (const IMat& phi : elements) orbit.insert(act_on_generatrix(ctx, phi, g));
  return std::vector<Generatrix>(orbit.begin(), orbit.end());
}

}  // namespace enriq::oracle
