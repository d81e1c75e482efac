#include "enriq/fq.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace enriq {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long modp(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Polynomial arithmetic over F_p on coefficient vectors, degree 0 first.
using Poly = std::vector<long>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = modp(prod[i + j] + a[i] * b[j], p);
  }
  const std::size_t m = mod.size() - 1;  // modulus degree, monic
  for (std::size_t d = prod.size(); d-- > m;) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t k = 0; k < m; ++k)
      prod[d - m + k] = modp(prod[d - m + k] - c * mod[k], p);
  }
  prod.resize(m);
  return prod;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, long p) {
  Poly result(mod.size() - 1, 0);
  result[0] = 1;
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

bool poly_is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

bool poly_is_zero(const Poly& a) {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

// x^(p^k) mod f, used by the Rabin irreducibility test.
Poly frobenius_power(const Poly& mod, long p, int k) {
  Poly x(mod.size() - 1, 0);
  if (mod.size() - 1 == 1) {
    // degree-1 modulus: x reduces to -c_0
    x[0] = modp(-mod[0], p);
  } else {
    x[1] = 1;
  }
  Poly r = x;
  for (int i = 0; i < k; ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(p);
    r = poly_powmod(r, e, mod, p);
  }
  return r;
}

bool is_irreducible(const Poly& f, long p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  // Rabin: x^(p^m) == x mod f, and x^(p^(m/r)) - x coprime-check via
  // "not equal to x" is insufficient in general; use the gcd-free variant:
  // for each prime divisor r of m, x^(p^(m/r)) != x, and x^(p^m) == x.
  Poly x(m, 0);
  x[1 % m] = (m == 1) ? 0 : 1;
  Poly xm = frobenius_power(f, p, m);
  Poly diff(m, 0);
  for (int i = 0; i < m; ++i) diff[i] = modp(xm[i] - x[i], p);
  if (!poly_is_zero(diff)) return false;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime(r)) continue;
    Poly xr = frobenius_power(f, p, m / r);
    Poly d(m, 0);
    bool eq = true;
    for (int i = 0; i < m; ++i) {
      d[i] = modp(xr[i] - x[i], p);
      if (d[i] != 0) eq = false;
    }
    if (eq) return false;
    // Rabin requires gcd(x^(p^(m/r)) - x, f) = 1; since f has no roots of
    // lower degree exactly when the gcd is trivial, compute the gcd.
    Poly a = f, b = d;
    // trim b
    while (!b.empty() && b.back() == 0) b.pop_back();
    while (!poly_is_zero(b) && !b.empty()) {
      // a mod b
      Poly rmd = a;
      while (rmd.size() >= b.size()) {
        while (!rmd.empty() && rmd.back() == 0) rmd.pop_back();
        if (rmd.size() < b.size()) break;
        long lead_b = b.back();
        long inv = 1;
        for (long t = 1; t < p; ++t)
          if (modp(lead_b * t, p) == 1) {
            inv = t;
            break;
          }
        long c = modp(rmd.back() * inv, p);
        std::size_t shift = rmd.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
          rmd[shift + i] = modp(rmd[shift + i] - c * b[i], p);
      }
      while (!rmd.empty() && rmd.back() == 0) rmd.pop_back();
      a = b;
      b = rmd;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() != 1) return false;  // nontrivial gcd
  }
  return true;
}

struct TableEntry {
  long p;
  int m;
  std::array<long, 5> coeffs;  // degree 0.. (monic lead implied), -1 padded
};

// Shipped moduli for the common towers; each is the search minimum and the
// test suite re-derives them.
constexpr TableEntry kModulusTable[] = {
    {3, 2, {1, 0, -1, -1, -1}},   // t^2 + 1
    {3, 3, {1, 0, 2, -1, -1}},    // t^3 + 2t^2 + 1
    {3, 4, {1, 0, 1, 1, -1}},     // t^4 + t^3 + t^2 + 1
    {5, 2, {1, 1, -1, -1, -1}},   // t^2 + t + 1
    {5, 3, {1, 0, 1, -1, -1}},    // t^3 + t^2 + 1
    {5, 4, {1, 0, 1, 1, -1}},     // t^4 + t^3 + t^2 + 1
    {7, 2, {1, 0, -1, -1, -1}},   // t^2 + 1
    {7, 3, {1, 0, 1, -1, -1}},    // t^3 + t^2 + 1
    {11, 2, {1, 0, -1, -1, -1}},  // t^2 + 1
    {13, 2, {1, 3, -1, -1, -1}},  // t^2 + 3t + 1
};

}  // namespace

std::vector<long> smallest_irreducible(long p, int m) {
  if (m == 1) return {0, 1};  // t itself; arithmetic never consults it
  // Iterate candidate tuples (c_0, ..., c_{m-1}) with c_0 most significant.
  std::vector<long> c(m, 0);
  for (;;) {
    Poly f(m + 1, 0);
    for (int i = 0; i < m; ++i) f[i] = c[i];
    f[m] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    int k = m - 1;
    while (k >= 0 && c[k] == p - 1) c[k--] = 0;
    if (k < 0) throw Error("no irreducible polynomial found (impossible)");
    ++c[k];
  }
}

FqTower::FqTower(long p, int m) : p_(p), m_(m) {
  if (!is_prime(p) || p == 2) throw Error("FqTower: p must be an odd prime");
  if (m < 1 || m > 8) throw Error("FqTower: extension degree out of range");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1ULL << 31)) throw Error("FqTower: field too large");
  }
  q_ = q;
  modulus_.assign(m + 1, 0);
  bool found = false;
  for (const auto& e : kModulusTable)
    if (e.p == p && e.m == m) {
      for (int i = 0; i < m; ++i) modulus_[i] = e.coeffs[i];
      modulus_[m] = 1;
      found = true;
      break;
    }
  if (!found) {
    auto f = smallest_irreducible(p, m);
    for (int i = 0; i <= m; ++i) modulus_[i] = f[i];
  }
  if (q_ <= 1024) {
    mul_table_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = a; b < q_; ++b) {
        Fq r = mul_slow(static_cast<Fq>(a), static_cast<Fq>(b));
        mul_table_[a * q_ + b] = r;
        mul_table_[b * q_ + a] = r;
      }
    inv_table_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a) {
      if (inv_table_[a]) continue;
      for (std::uint64_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = static_cast<Fq>(b);
          inv_table_[b] = static_cast<Fq>(a);
          break;
        }
    }
    frob_table_.assign(q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      frob_table_[a] = pow(static_cast<Fq>(a), static_cast<std::uint64_t>(p_));
    tables_ = true;
  }
}

std::vector<long> FqTower::decode(Fq a) const {
  std::vector<long> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<long>(a % p_);
    a /= static_cast<Fq>(p_);
  }
  return c;
}

Fq FqTower::encode(const std::vector<long>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(m_))
    for (std::size_t i = m_; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) throw Error("Fq encode: degree too large");
  Fq a = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    long c = (static_cast<std::size_t>(i) < coeffs.size()) ? modp(coeffs[i], p_) : 0;
    a = static_cast<Fq>(a * p_ + c);
  }
  return a;
}

Fq FqTower::from_base(long v) const { return static_cast<Fq>(modp(v, p_)); }

long FqTower::to_base(Fq a) const {
  if (!in_base(a)) throw Error("Fq element not in the prime field");
  return static_cast<long>(a);
}

Fq FqTower::add(Fq a, Fq b) const {
  Fq r = 0;
  Fq mult = 1;
  for (int i = 0; i < m_; ++i) {
    long s = static_cast<long>(a % p_) + static_cast<long>(b % p_);
    if (s >= p_) s -= p_;
    r += static_cast<Fq>(s) * mult;
    a /= static_cast<Fq>(p_);
    b /= static_cast<Fq>(p_);
    mult *= static_cast<Fq>(p_);
  }
  return r;
}

Fq FqTower::neg(Fq a) const {
  Fq r = 0;
  Fq mult = 1;
  for (int i = 0; i < m_; ++i) {
    long c = static_cast<long>(a % p_);
    r += static_cast<Fq>(c == 0 ? 0 : p_ - c) * mult;
    a /= static_cast<Fq>(p_);
    mult *= static_cast<Fq>(p_);
  }
  return r;
}

Fq FqTower::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FqTower::mul_slow(Fq a, Fq b) const {
  Poly pa = decode(a), pb = decode(b);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  return encode(r);
}

Fq FqTower::mul(Fq a, Fq b) const {
  if (tables_) return mul_table_[static_cast<std::uint64_t>(a) * q_ + b];
  return mul_slow(a, b);
}

Fq FqTower::pow(Fq a, std::uint64_t e) const {
  Fq r = 1;
  Fq base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq FqTower::inv(Fq a) const {
  if (a == 0) throw Error("Fq division by zero");
  if (tables_) return inv_table_[a];
  return pow(a, q_ - 2);
}

Fq FqTower::frob(Fq a) const {
  if (tables_) return frob_table_[a];
  return pow(a, static_cast<std::uint64_t>(p_));
}

Fq FqTower::frob_inv(Fq a) const {
  Fq r = a;
  for (int i = 0; i < m_ - 1; ++i) r = frob(r);
  return r;
}

const FqTower& tower_for(long p, int m) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<FqTower>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<FqTower>(p, m)).first;
  return *it->second;
}

}  // namespace enriq
