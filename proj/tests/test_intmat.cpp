#include <doctest.h>

#include <random>

#include "enriq/intmat.hpp"

using namespace enriq;

namespace {

IMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IMat random_symmetric(std::mt19937_64& rng, std::size_t n, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = dist(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("bareiss determinant") {
  CHECK(det_bareiss(IMat::identity(3)) == 1);
  CHECK(det_bareiss(IMat(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(det_bareiss(IMat(2, 2, {2, 3, 4, 6})) == 0);
  CHECK(det_bareiss(IMat(3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2})) == 4);
}

TEST_CASE("hnf is canonical for the row lattice") {
  IMat a(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16});
  IMat h = hnf_rows(a);
  // pivots positive, entries above pivots reduced
  CHECK(h(0, 0) > 0);
  auto [h2, u] = hnf_rows_transform(a);
  CHECK(h2 == h);
  CHECK(u * a == h);
  CHECK(abs(det_bareiss(u)) == 1);
  // permuting rows does not change the canonical form
  IMat b(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    b(0, j) = a(2, j);
    b(1, j) = a(0, j);
    b(2, j) = a(1, j);
  }
  CHECK(hnf_rows(b) == h);
}

TEST_CASE("kernel columns solve a x = 0 and are saturated") {
  IMat a(1, 3, {2, 4, 6});
  IMat k = kernel_columns(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  // saturation: kernel of [1 2 3] equals kernel of [2 4 6]
  IMat a2(1, 3, {1, 2, 3});
  CHECK(kernel_columns(a2) == k);
}

TEST_CASE("smith normal form divisor chain") {
  IMat a(2, 2, {2, 0, 0, 4});
  auto s = smith_normal_form(a);
  CHECK(s.divisors == std::vector<Int>{2, 4});
  IMat d = s.u * a * s.v;
  CHECK(d(0, 0) == 2);
  CHECK(d(1, 1) == 4);
  CHECK(d(0, 1) == 0);
  CHECK(d(1, 0) == 0);

  IMat hyperbolic3(2, 2, {0, 3, 3, 0});
  auto s2 = smith_normal_form(hyperbolic3);
  CHECK(s2.divisors == std::vector<Int>{3, 3});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    IMat a = random_symmetric(rng, 4, 6);
    if (det_bareiss(a) == 0) continue;
    auto s = smith_normal_form(a);
    CHECK(abs(det_bareiss(s.u)) == 1);
    CHECK(abs(det_bareiss(s.v)) == 1);
    IMat d = s.u * a * s.v;
    Int product(1);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(d(i, j) == 0);
      product *= d(i, i);
      if (i + 1 < 4 && d(i, i) != 0) CHECK(d(i + 1, i + 1) % d(i, i) == 0);
    }
    CHECK(abs(product) == abs(det_bareiss(a)));
  }
}

TEST_CASE("signature by congruent diagonalization") {
  CHECK(signature_of(IMat(2, 2, {0, 1, 1, 0})).n_plus == 1);
  CHECK(signature_of(IMat(2, 2, {0, 1, 1, 0})).n_minus == 1);
  auto s = signature_of(IMat(3, 3, {2, 0, 0, 0, -2, 0, 0, 0, -2}));
  CHECK(s.n_plus == 1);
  CHECK(s.n_minus == 2);
  CHECK_THROWS_AS(signature_of(IMat(2, 2, {1, 1, 1, 1})), Error);
}

TEST_CASE("rational solve and inverse") {
  QMat a = to_rational(IMat(2, 2, {1, 2, 3, 4}));
  QMat inv = inverse_rational(a);
  QMat prod = a * inv;
  CHECK(prod == to_rational(IMat::identity(2)));
  IMat u(2, 2, {1, 3, 0, -1});
  CHECK(inverse_unimodular(u) * u == IMat::identity(2));
  // inconsistent system
  QMat bad(2, 1);
  bad(0, 0) = 1;
  bad(1, 0) = 1;
  QMat sing = to_rational(IMat(2, 2, {1, 1, 1, 1}));
  QMat rhs(2, 1);
  rhs(0, 0) = 0;
  rhs(1, 0) = 1;
  CHECK(!solve_rational(sing, rhs).has_value());
}

TEST_CASE("floor_sqrt on rationals") {
  CHECK(floor_sqrt(Rat(0)) == 0);
  CHECK(floor_sqrt(Rat(1)) == 1);
  CHECK(floor_sqrt(Rat(8)) == 2);
  CHECK(floor_sqrt(Rat(9)) == 3);
  CHECK(floor_sqrt(Rat(1, 2)) == 0);
  CHECK(floor_sqrt(Rat(49, 4)) == 3);
}
