#include <doctest.h>

#include <set>

#include "enriq/generatrix.hpp"
#include "enriq/lattice.hpp"

using namespace enriq;

namespace {

FiniteQuadraticSpace diag11(long p) {
  Matrix<long> g(2, 2);
  g(0, 0) = 1;
  g(1, 1) = 1;
  return make_space(p, std::move(g));
}

// span((1, -t)) in diag(1,1) over F_9 with t^2 = -1
Subspace toy_line(int sign) {
  const FqTower& k = tower_for(3, 2);
  Fq t = k.encode({0, 1});
  FqMat rows(1, 2);
  rows.at(0, 0) = k.one();
  rows.at(0, 1) = sign > 0 ? t : k.neg(t);
  return make_subspace(diag11(3), 2, rows);
}

}  // namespace

TEST_CASE("frobenius image") {
  // rational subspaces are fixed
  FqMat rows(1, 2);
  rows.at(0, 0) = 1;
  rows.at(0, 1) = 2;
  Subspace rational = make_subspace(diag11(3), 2, rows);
  CHECK(frobenius_image(rational) == rational);
  // span((t,1)) -> span((-t,1)); applying twice returns the original
  Subspace line = toy_line(+1);
  Subspace img = frobenius_image(line);
  CHECK(img == toy_line(-1));
  CHECK(frobenius_image(img) == line);
  CHECK(frobenius_preimage(img) == line);
}

TEST_CASE("isotropy") {
  CHECK(is_totally_isotropic(toy_line(+1)));  // 1 + t^2 = 0
  FqMat e1(1, 2);
  e1.at(0, 0) = 1;
  CHECK_FALSE(is_totally_isotropic(make_subspace(diag11(3), 2, e1)));
  CHECK(is_totally_isotropic(make_subspace(diag11(3), 2, FqMat(0, 2))));
}

TEST_CASE("characteristic and strict predicates at sigma = 1") {
  Subspace g = toy_line(-1);  // span((1, -t))
  CHECK(is_characteristic(g));
  CHECK(is_strictly_characteristic(g));
  // a rational isotropic line in a neutral plane is Frobenius-fixed
  Matrix<long> hyp(2, 2);
  hyp(0, 1) = 1;
  hyp(1, 0) = 1;
  auto neutral = make_space(3, std::move(hyp));
  FqMat iso(1, 2);
  iso.at(0, 0) = 1;
  Subspace fixed_line = make_subspace(neutral, 2, iso);
  CHECK(is_totally_isotropic(fixed_line));
  CHECK_FALSE(is_characteristic(fixed_line));
  // non-isotropic line is not characteristic
  FqMat e1(1, 2);
  e1.at(0, 0) = 1;
  CHECK_FALSE(is_characteristic(make_subspace(diag11(3), 2, e1)));
}

TEST_CASE("sigma = 1 censuses") {
  // diag(1,1) over F_3: no characteristic lines rationally, two over F_9
  CHECK(enumerate_generatrices(diag11(3), 1, GenFilter::Characteristic).empty());
  auto found = enumerate_generatrices(diag11(3), 2, GenFilter::Characteristic);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == toy_line(+1));
  CHECK(found[1] == toy_line(-1));
  for (const auto& g : found) CHECK(is_strictly_characteristic(g));
  // hyperbolic over F_3: two rational isotropic lines, no characteristic ones
  Matrix<long> hyp(2, 2);
  hyp(0, 1) = 1;
  hyp(1, 0) = 1;
  auto neutral = make_space(3, std::move(hyp));
  CHECK(enumerate_subspaces(neutral, 1, 1, [](const Subspace& s) {
          return is_totally_isotropic(s);
        }).size() == 2);
  CHECK(enumerate_generatrices(neutral, 1, GenFilter::Characteristic).empty());
}

TEST_CASE("census closed under frobenius") {
  for (long p : {3L, 5L}) {
    auto v = nonneutral_form(p, 2);
    auto found = enumerate_generatrices(v, 2, GenFilter::Characteristic);
    CHECK(found.size() == 2);
    for (const auto& g : found) {
      Subspace img = frobenius_image(g);
      CHECK(std::binary_search(found.begin(), found.end(), img));
    }
  }
}

TEST_CASE("characteristic properties") {
  auto v = nonneutral_form(3, 4);
  auto chars = enumerate_generatrices(v, 2, GenFilter::Characteristic);
  REQUIRE(!chars.empty());
  for (const auto& g : chars) {
    Subspace img = frobenius_image(g);
    CHECK(is_totally_isotropic(img));
    CHECK(subspace_intersection(g, img).rank() == g.rank() - 1);
  }
}

TEST_CASE("rational part") {
  Subspace g = toy_line(-1);
  CHECK(rational_part(g).rank() == 0);
  FqMat rows(1, 2);
  rows.at(0, 0) = 1;
  rows.at(0, 1) = 2;
  Subspace rational = make_subspace(diag11(3), 2, rows);
  CHECK(rational_part(rational) == rational);
  CHECK(artin_invariant_of_generatrix(toy_line(-1)) == 1);
  // rational part dimension + artin invariant = sigma for the sigma=2 census
  auto v = nonneutral_form(3, 4);
  auto chars = enumerate_generatrices(v, 2, GenFilter::Characteristic);
  for (const auto& g2 : chars) {
    Subspace lam = rational_part(g2);
    CHECK(is_totally_isotropic(lam));
    CHECK(frobenius_image(lam) == lam);
    CHECK(artin_invariant_of_generatrix(g2) + static_cast<long>(lam.rank()) == 2);
  }
}

TEST_CASE("chain vector at sigma = 1") {
  Subspace g = toy_line(-1);
  auto chain = chain_vector(g);
  const FqTower& k = tower_for(3, 2);
  Fq t = k.encode({0, 1});
  CHECK(chain.chain.rows == 1);
  CHECK(chain.chain.at(0, 0) == k.one());
  CHECK(chain.chain.at(0, 1) == k.neg(t));
  CHECK(chain.translates.rows == 2);
  // <F x0, x0> = 1 - t^2 = 2
  CHECK(chain.translates.at(1, 1) == t);
}

TEST_CASE("enumeration budget") {
  EnumLimits tiny;
  tiny.grassmannian_budget = 3;
  CHECK_THROWS_AS(enumerate_generatrices(diag11(3), 2, GenFilter::Characteristic, tiny), CapError);
}

TEST_CASE("sigma=2 census structure at p=3") {
  auto v = nonneutral_form(3, 4);
  // over F_9: 20 characteristic generatrices, all on the boundary stratum
  // (one rational isotropic line each), none strict
  auto chars = enumerate_generatrices(v, 2, GenFilter::Characteristic);
  CHECK(chars.size() == 20);
  CHECK(enumerate_generatrices(v, 2, GenFilter::Strict).empty());
  for (const auto& g : chars) {
    CHECK(rational_part(g).rank() == 1);
    CHECK(artin_invariant_of_generatrix(g) == 1);
    CHECK(std::binary_search(chars.begin(), chars.end(), frobenius_image(g)));
  }
  // the 20 split as 10 rational isotropic lines times 2 lines each
  std::set<Subspace> lines;
  for (const auto& g : chars) lines.insert(rational_part(g));
  CHECK(lines.size() == 10);
}

namespace {

// Strict generatrices at sigma=2 over F_81, built from their chain lines:
// G = <x0, F x0> for an isotropic line <x0> with <x0, F x0> = 0 and
// independent translates. The scan is exhaustive: the chain line of a
// strict G is recovered as the intersection of G with its Frobenius
// preimage.
std::vector<Subspace> strict_sigma2_m4(const FiniteQuadraticSpace& v) {
  const FqTower& k = tower_for(v.p, 4);
  FqMat gram = gram_in_tower(k, v);
  auto lines =
      enumerate_subspaces(v, 4, 1, [](const Subspace& s) { return is_totally_isotropic(s); });
  std::set<Subspace> out;
  for (const auto& line : lines) {
    FqMat t(4, 4);
    for (std::size_t c = 0; c < 4; ++c) t.at(0, c) = line.basis.at(0, c);
    for (std::size_t i = 1; i < 4; ++i)
      for (std::size_t c = 0; c < 4; ++c) t.at(i, c) = k.frob(t.at(i - 1, c));
    Fq pair01 = 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        pair01 = k.add(pair01, k.mul(k.mul(t.at(0, a), gram.at(a, b)), t.at(1, b)));
    if (pair01 != 0) continue;
    FqMat rank_probe = t;
    if (fq_rank(k, rank_probe) != 4) continue;
    FqMat basis(2, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      basis.at(0, c) = t.at(0, c);
      basis.at(1, c) = t.at(1, c);
    }
    out.insert(make_subspace(v, 4, std::move(basis)));
  }
  return std::vector<Subspace>(out.begin(), out.end());
}

}  // namespace

TEST_CASE("sigma=2 strict generatrices over F_81") {
  auto v = nonneutral_form(3, 4);
  auto strict = strict_sigma2_m4(v);
  CHECK(strict.size() == 144);
  const FqTower& k = tower_for(3, 4);
  for (const auto& g : strict) {
    CHECK(is_strictly_characteristic(g));
    CHECK(rational_part(g).rank() == 0);
    CHECK(artin_invariant_of_generatrix(g) == 2);
    // chain basis and the shifted pairing pattern hold at sigma = 2
    auto ch = chain_vector(g);
    CHECK(ch.translates.rows == 4);
    CHECK(ch.chain.rows == 2);
  }
  // isometries commuting with Frobenius: a fixer of one strict G acts on its
  // chain as multiplication by a scalar of mu_10; only +-id fixes them all
  auto isos = form_isometries(v);
  CHECK(isos.size() == 1440);
  int fix_all = 0;
  for (const auto& a : isos) {
    FqMat at(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) at.at(i, j) = a.at(j, i);
    auto act = [&](const Subspace& s) {
      FqMat nb = fq_mul(k, s.basis, at);
      fq_rref(k, nb, true);
      return Subspace{v, 4, nb};
    };
    bool fixes_all = true;
    bool fixes_one = false;
    for (const auto& s : strict) {
      if (act(s) == s)
        fixes_one = true;
      else
        fixes_all = false;
    }
    if (fixes_all) ++fix_all;
    if (!fixes_one) continue;
    for (const auto& s : strict) {
      if (!(act(s) == s)) continue;
      auto ch = chain_vector(s);
      FqMat t0(1, 4);
      for (std::size_t c = 0; c < 4; ++c) t0.at(0, c) = ch.translates.at(0, c);
      FqMat img = fq_mul(k, t0, at);
      Fq alpha = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (t0.at(0, c) != 0) {
          alpha = k.mul(img.at(0, c), k.inv(t0.at(0, c)));
          break;
        }
      Fq power = alpha;
      for (std::size_t i = 0; i < 4; ++i) {
        FqMat ti(1, 4);
        for (std::size_t c = 0; c < 4; ++c) ti.at(0, c) = ch.translates.at(i, c);
        FqMat ii = fq_mul(k, ti, at);
        for (std::size_t c = 0; c < 4; ++c) CHECK(ii.at(0, c) == k.mul(power, ti.at(0, c)));
        power = k.pow(power, 3);
      }
      CHECK(k.pow(alpha, 10) == k.one());  // mu_(p^sigma + 1)
    }
  }
  CHECK(fix_all == 2);  // exactly +-id
}

TEST_CASE("sigma=1 census count stabilizes with the field") {
  // the two strict lines of the binary non-neutral form are defined over
  // F_p^2; enlarging the field does not add more
  for (long p : {3L, 5L}) {
    auto v = nonneutral_form(p, 2);
    CHECK(enumerate_generatrices(v, 2, GenFilter::Strict).size() == 2);
    CHECK(enumerate_generatrices(v, 4, GenFilter::Strict).size() == 2);
  }
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(2, 1, Int(9)) == 10);
  CHECK(gaussian_binomial(4, 2, Int(3)) == 130);
  CHECK(gaussian_binomial(4, 2, Int(9)) == 7462);
  CHECK(gaussian_binomial(3, 0, Int(5)) == 1);
}
