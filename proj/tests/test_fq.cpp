#include <doctest.h>

#include "enriq/fqmat.hpp"

using namespace enriq;

TEST_CASE("modulus table matches the deterministic search") {
  for (auto [p, m] : {std::pair<long, int>{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3},
                      {11, 2}, {13, 2}}) {
    const FqTower& k = tower_for(p, m);
    auto searched = smallest_irreducible(p, m);
    CHECK(k.modulus() == searched);
  }
}

TEST_CASE("tower arithmetic in F_9") {
  const FqTower& k = tower_for(3, 2);
  CHECK(k.q() == 9);
  // modulus t^2 + 1, so t^2 = -1
  Fq t = k.encode({0, 1});
  CHECK(k.mul(t, t) == k.from_base(-1));
  CHECK(k.add(t, k.neg(t)) == 0);
  for (Fq a = 1; a < 9; ++a) CHECK(k.mul(a, k.inv(a)) == k.one());
  // Frobenius has order 2 and fixes exactly F_3
  int fixed = 0;
  for (Fq a = 0; a < 9; ++a) {
    CHECK(k.frob(k.frob(a)) == a);
    if (k.frob(a) == a) ++fixed;
  }
  CHECK(fixed == 3);
  CHECK(k.frob(t) == k.neg(t));
}

TEST_CASE("frobenius order m on towers") {
  for (auto [p, m] : {std::pair<long, int>{3, 3}, {5, 2}, {7, 2}}) {
    const FqTower& k = tower_for(p, m);
    Fq t = k.encode({0, 1});
    Fq cur = t;
    int order = 0;
    do {
      cur = k.frob(cur);
      ++order;
    } while (cur != t && order <= m);
    CHECK(order == m);
    CHECK(k.frob_inv(k.frob(t)) == t);
  }
}

TEST_CASE("rref canonical form") {
  const FqTower& k = tower_for(3, 1);
  FqMat a(2, 3);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(0, 2) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 2;
  a.at(1, 2) = 0;
  FqMat r = fq_row_space(k, a);
  // pivots in columns 0 and 2 (columns 0,1 are dependent mod 3)
  CHECK(r.rows == 2);
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 2);
  CHECK(r.at(0, 2) == 0);
  CHECK(r.at(1, 2) == 1);
  // swapping and scaling rows does not change the representative
  FqMat b(2, 3);
  b.at(0, 0) = 2;
  b.at(0, 1) = 1;
  b.at(0, 2) = 0;
  b.at(1, 0) = 1;
  b.at(1, 1) = 2;
  b.at(1, 2) = 2;
  CHECK(fq_row_space(k, b) == r);
}

TEST_CASE("kernel and intersection") {
  const FqTower& k = tower_for(5, 1);
  FqMat a(1, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(0, 2) = 3;
  FqMat ker = fq_right_kernel(k, a);
  CHECK(ker.rows == 2);
  for (std::size_t r = 0; r < ker.rows; ++r) {
    Fq acc = 0;
    for (std::size_t c = 0; c < 3; ++c) acc = k.add(acc, k.mul(a.at(0, c), ker.at(r, c)));
    CHECK(acc == 0);
  }
  // intersection of two planes in F_5^3 is a line
  FqMat p1(2, 3);
  p1.at(0, 0) = 1;
  p1.at(1, 1) = 1;
  FqMat p2(2, 3);
  p2.at(0, 1) = 1;
  p2.at(1, 2) = 1;
  FqMat inter = fq_row_intersection(k, p1, p2);
  CHECK(inter.rows == 1);
  CHECK(inter.at(0, 0) == 0);
  CHECK(inter.at(0, 1) == 1);
  CHECK(inter.at(0, 2) == 0);
}
