#include <doctest.h>

#include "enriq/lattice.hpp"

using namespace enriq;

TEST_CASE("standard constructors") {
  CHECK(construct_standard("U").gram() == IMat(2, 2, {0, 1, 1, 0}));
  CHECK(construct_standard("twist(U,2)").gram() == IMat(2, 2, {0, 2, 2, 0}));
  CHECK(construct_standard("twist(A2,-1)").gram() == IMat(2, 2, {-2, 1, 1, -2}));
  IntegerLattice gamma = construct_standard("sum(U,twist(E8,-1))");
  CHECK(gamma.rank() == 10);
  CHECK(discriminant(gamma) == -1);
  CHECK_THROWS_AS(construct_standard("twist(U,0)"), SchemaError);
  CHECK_THROWS_AS(construct_standard("sum(U"), SchemaError);
  CHECK_THROWS_AS(construct_standard("B7"), SchemaError);
  CHECK_THROWS_AS(construct_standard("U extra"), SchemaError);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(construct_standard("U")) == -1);
  CHECK(discriminant(construct_standard("twist(U,3)")) == -9);
  CHECK(discriminant(construct_standard("twist(A2,-1)")) == 3);
  CHECK(discriminant(construct_standard("E8")) == 1);
  CHECK(discriminant(construct_standard("D4")) == 4);
}

TEST_CASE("discriminant scales with twist") {
  for (const char* expr : {"U", "A2", "D4", "twist(A2,-1)"}) {
    IntegerLattice l = construct_standard(expr);
    for (long n : {-1L, 2L, 3L}) {
      IMat scaled = l.gram();
      for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) scaled(i, j) *= n;
      Int expect = discriminant(l);
      for (std::size_t i = 0; i < l.rank(); ++i) expect *= n;
      CHECK(discriminant(IntegerLattice(scaled)) == expect);
    }
  }
}

TEST_CASE("signature") {
  auto u = signature(construct_standard("U"));
  CHECK(u.n_plus == 1);
  CHECK(u.n_minus == 1);
  auto e8 = signature(construct_standard("twist(E8,-1)"));
  CHECK(e8.n_plus == 0);
  CHECK(e8.n_minus == 8);
  auto gamma = signature(construct_standard("sum(U,twist(E8,-1))"));
  CHECK(gamma.n_plus == 1);
  CHECK(gamma.n_minus == 9);
}

TEST_CASE("signature components sum to rank; sign consistency") {
  for (const char* expr : {"U", "A2", "D4", "E8", "twist(E8,-1)", "sum(U,twist(E8,-1))",
                           "sum(twist(A2,-1),twist(A2,-1))", "diag(-4,-4)"}) {
    IntegerLattice l = construct_standard(expr);
    auto s = signature(l);
    CHECK(s.n_plus + s.n_minus == static_cast<long>(l.rank()));
    int sign = (s.n_minus % 2 == 0) ? 1 : -1;
    CHECK(sgn(discriminant(l)) == sign);
  }
}

TEST_CASE("discriminant data") {
  auto u = discriminant_data(construct_standard("U"), 3);
  CHECK(u.elementary_divisors == std::vector<Int>{1, 1});
  CHECK(u.p_elementary);
  CHECK(u.p_length == 0);

  auto u3 = discriminant_data(construct_standard("twist(U,3)"), 3);
  CHECK(u3.elementary_divisors == std::vector<Int>{3, 3});
  CHECK(u3.p_elementary);
  CHECK(u3.p_length == 2);

  auto a2 = discriminant_data(construct_standard("twist(A2,-1)"), 3);
  CHECK(a2.elementary_divisors == std::vector<Int>{1, 3});
  CHECK(a2.p_elementary);
  CHECK(a2.p_length == 1);

  // divisor product = |discriminant| across the corpus
  for (const char* expr : {"U", "twist(U,3)", "twist(A2,-1)", "D4", "sum(D4,twist(U,5))"}) {
    IntegerLattice l = construct_standard(expr);
    auto d = discriminant_data(l, 3);
    CHECK(d.group_order == abs(discriminant(l)));
  }
}

TEST_CASE("artin invariant") {
  CHECK(artin_invariant(construct_standard("twist(U,3)"), 3).sigma == 1);
  CHECK(artin_invariant(construct_standard("sum(twist(A2,-1),twist(A2,-1))"), 3).sigma == 1);
  CHECK_THROWS_AS(artin_invariant(construct_standard("twist(A2,-1)"), 3), Error);
  CHECK_FALSE(artin_invariant(construct_standard("twist(U,3)"), 3).genuine_k3);
}

TEST_CASE("dual quotient form") {
  auto u3 = dual_quotient_form(construct_standard("twist(U,3)"), 3);
  CHECK(u3.space.dim() == 2);
  CHECK(u3.space.gram(0, 0) == 0);
  CHECK(u3.space.gram(0, 1) == 1);
  CHECK(u3.space.gram(1, 0) == 1);
  CHECK(u3.space.gram(1, 1) == 0);
  CHECK(u3.neutral);

  auto a22 = dual_quotient_form(construct_standard("sum(twist(A2,-1),twist(A2,-1))"), 3);
  CHECK(a22.space.dim() == 2);
  CHECK_FALSE(a22.neutral);
  CHECK(is_nondegenerate(a22.space));

  auto u = dual_quotient_form(construct_standard("U"), 3);
  CHECK(u.space.dim() == 0);
}

TEST_CASE("orthogonal complement") {
  // span(e1) in diag(-4,-4) -> diag(-4)
  IntegerLattice d44 = construct_standard("diag(-4,-4)");
  IntegerLattice d4 = construct_standard("diag(-4)");
  LatticeEmbedding e1 = make_embedding(d4, d44, IMat(2, 1, {1, 0}));
  auto [k, inc] = orthogonal_complement(e1);
  CHECK(k.gram() == IMat(1, 1, {-4}));
  CHECK(inc.matrix == IMat(2, 1, {0, 1}));

  // span(e1) in A2(-1) -> diag(-6) spanned by e1 + 2 e2
  IntegerLattice a2m = construct_standard("twist(A2,-1)");
  IntegerLattice d2 = construct_standard("diag(-2)");
  LatticeEmbedding root = make_embedding(d2, a2m, IMat(2, 1, {1, 0}));
  auto [k2, inc2] = orthogonal_complement(root);
  CHECK(k2.gram() == IMat(1, 1, {-6}));
  CHECK(inc2.matrix == IMat(2, 1, {1, 2}));

  // full-rank embedding -> rank-0 complement
  auto [k3, inc3] = orthogonal_complement(identity_embedding(a2m));
  CHECK(k3.rank() == 0);
}

TEST_CASE("saturation and primitivity") {
  IntegerLattice u = construct_standard("U");
  // span of 2(e1+e2) in U: index 2 under its saturation span(e1+e2)
  IntegerLattice d8 = construct_standard("diag(8)");
  LatticeEmbedding doubled = make_embedding(d8, u, IMat(2, 1, {2, 2}));
  CHECK(saturation_index(doubled) == 2);
  CHECK_FALSE(is_primitive(doubled));
  LatticeEmbedding sat = saturate(doubled);
  CHECK(sat.matrix == IMat(2, 1, {1, 1}));
  CHECK(sat.source.gram() == IMat(1, 1, {2}));
  CHECK(is_primitive(sat));
  // idempotence
  LatticeEmbedding sat2 = saturate(sat);
  CHECK(sat2.matrix == sat.matrix);

  IntegerLattice a2m = construct_standard("twist(A2,-1)");
  LatticeEmbedding root = make_embedding(construct_standard("diag(-2)"), a2m, IMat(2, 1, {1, 0}));
  CHECK(saturation_index(root) == 1);
  CHECK(is_primitive(root));
}

TEST_CASE("compose embeddings") {
  IntegerLattice a2m = construct_standard("twist(A2,-1)");
  LatticeEmbedding id = identity_embedding(a2m);
  LatticeEmbedding root = make_embedding(construct_standard("diag(-2)"), a2m, IMat(2, 1, {1, 0}));
  LatticeEmbedding composed = compose_embeddings(id, root);
  CHECK(composed.matrix == root.matrix);
  // block inclusion chain
  IntegerLattice sum = construct_standard("sum(twist(A2,-1),twist(U,3))");
  IMat block(4, 2);
  block(0, 0) = 1;
  block(1, 1) = 1;
  LatticeEmbedding a2_in_sum = make_embedding(a2m, sum, block);
  LatticeEmbedding chained = compose_embeddings(a2_in_sum, root);
  CHECK(chained.matrix == IMat(4, 1, {1, 0, 0, 0}));
  // form mismatch
  CHECK_THROWS_AS(make_embedding(construct_standard("diag(-4)"), construct_standard("U"),
                                 IMat(2, 1, {1, 0})),
                  Error);
  CHECK_THROWS_AS(compose_embeddings(root, root), Error);
}

TEST_CASE("overlattice from glue") {
  IntegerLattice u3 = construct_standard("twist(U,3)");
  auto dq = dual_quotient_form(u3, 3);
  // Lambda = span(e1-bar): e1-bar is isotropic in the hyperbolic N_0
  FqMat lambda_rows(1, 2);
  lambda_rows.at(0, 0) = 1;
  Subspace lambda = make_subspace(dq.space, 1, lambda_rows);
  Overlattice o = overlattice_from_glue(u3, 3, lambda);
  CHECK(o.lattice.gram() == IMat(2, 2, {0, 1, 1, 0}));
  CHECK(abs(det_bareiss(o.inclusion.matrix)) == 3);

  // Lambda = 0 is the identity on gram matrices
  Subspace zero = make_subspace(dq.space, 1, FqMat(0, 2));
  CHECK(overlattice_from_glue(u3, 3, zero).lattice.gram() == u3.gram());

  // non-isotropic glue rejected: e1+e2 has value 2 in the hyperbolic form
  FqMat bad(1, 2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 1;
  Subspace bad_lambda = make_subspace(dq.space, 1, bad);
  CHECK_THROWS_AS(overlattice_from_glue(u3, 3, bad_lambda), Error);

  // discriminant ratio p^(2 dim Lambda), index p^(dim Lambda), evenness
  CHECK(discriminant(u3) == discriminant(o.lattice) * 9);
  CHECK(o.lattice.is_even());
}
