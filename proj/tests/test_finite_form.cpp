#include <doctest.h>

#include "enriq/finite_form.hpp"
#include "enriq/oracle.hpp"

using namespace enriq;

namespace {

FiniteQuadraticSpace diag_form(long p, std::vector<long> entries) {
  Matrix<long> g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return make_space(p, std::move(g));
}

FiniteQuadraticSpace hyperbolic(long p) {
  Matrix<long> g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return make_space(p, std::move(g));
}

}  // namespace

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(diag_form(3, {1, 1})));
  CHECK_FALSE(is_nondegenerate(diag_form(3, {1, 0})));
  CHECK(is_nondegenerate(hyperbolic(5)));
}

TEST_CASE("neutrality by discriminant criterion") {
  CHECK(is_neutral(hyperbolic(3)));
  CHECK_FALSE(is_neutral(diag_form(3, {1, 1})));  // -1 nonsquare mod 3
  CHECK(is_neutral(diag_form(5, {1, 1})));        // -1 = 4 square mod 5
  CHECK_FALSE(is_neutral(diag_form(5, {1, 2})));
  CHECK_THROWS_AS(is_neutral(diag_form(3, {1, 1, 1})), Error);
  CHECK_THROWS_AS(is_neutral(diag_form(3, {1, 0})), Error);
}

TEST_CASE("neutrality agrees with the oracle on all diagonal forms of dim 2 and 4") {
  for (long p : {3L, 5L}) {
    for (std::size_t dim : {2UL, 4UL}) {
      std::vector<long> entries(dim, 1);
      for (;;) {
        auto v = diag_form(p, entries);
        bool oracle_neutral = !oracle::iso_subspaces(v, dim / 2).empty();
        CAPTURE(p);
        CAPTURE(entries);
        CHECK(is_neutral(v) == oracle_neutral);
        std::size_t k = 0;
        while (k < dim && entries[k] == p - 1) entries[k++] = 1;
        if (k == dim) break;
        ++entries[k];
      }
    }
  }
}

TEST_CASE("canonical non-neutral forms") {
  for (long p : {3L, 5L, 7L}) {
    auto v = nonneutral_form(p, 2);
    CHECK_FALSE(is_neutral(v));
    CHECK(is_nondegenerate(v));
  }
  auto v4 = nonneutral_form(3, 4);
  CHECK(v4.dim() == 4);
  CHECK_FALSE(is_neutral(v4));
}
