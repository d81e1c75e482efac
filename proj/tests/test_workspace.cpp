#include <doctest.h>

#include "enriq/workspace.hpp"
#include "fixtures.hpp"

using namespace enriq;

TEST_CASE("canonical serialization round trips") {
  IntegerLattice l = construct_standard("twist(A2,-1)");
  Json j = lattice_to_json(l);
  std::string bytes = canonical_dump(j);
  IntegerLattice back = lattice_from_json(Json::parse(bytes));
  CHECK(back.gram() == l.gram());
  CHECK(back.label() == l.label());
  CHECK(canonical_dump(lattice_to_json(back)) == bytes);

  LatticeEmbedding e = fixtures::diagonal_marking();
  std::string ebytes = canonical_dump(embedding_to_json(e));
  LatticeEmbedding eback = embedding_from_json(Json::parse(ebytes));
  CHECK(eback.matrix == e.matrix);
  CHECK(canonical_dump(embedding_to_json(eback)) == ebytes);
}

TEST_CASE("generatrix serialization") {
  auto v = nonneutral_form(3, 2);
  auto gens = enumerate_generatrices(v, 2, GenFilter::Characteristic);
  REQUIRE(gens.size() == 2);
  for (const auto& g : gens) {
    std::string bytes = canonical_dump(generatrix_to_json(g));
    Subspace back = generatrix_from_json(Json::parse(bytes));
    CHECK(back == g);
    CHECK(canonical_dump(generatrix_to_json(back)) == bytes);
  }
}

TEST_CASE("catalog serialization") {
  auto cat = fixtures::catalog_three_markings();
  cat.recorded.tau = 1;
  std::string bytes = canonical_dump(catalog_to_json(cat));
  EmbeddingCatalog back = catalog_from_json(Json::parse(bytes));
  CHECK(back.markings.size() == 3);
  CHECK(back.overlattices.size() == 1);
  CHECK(back.recorded.tau == 1);
  CHECK(canonical_dump(catalog_to_json(back)) == bytes);
}

TEST_CASE("workspace roundtrip is byte-identical on canonical input") {
  WorkspaceFile w;
  w.objects["a2neg"] = WorkspaceObject{
      "lattice", lattice_to_json(construct_standard("twist(A2,-1)")), "standard test lattice"};
  w.objects["diag_marking"] =
      WorkspaceObject{"embedding", embedding_to_json(fixtures::diagonal_marking()), ""};
  std::string canonical = canonical_dump(workspace_to_json(w));
  CHECK(workspace_roundtrip(canonical) == canonical);
  // non-canonical but valid input canonicalizes
  Json spaced = Json::parse(canonical);
  std::string pretty = spaced.dump(2);
  CHECK(workspace_roundtrip(pretty) == canonical);
}

TEST_CASE("workspace rejects invalid objects by name") {
  Json j;
  j["version"] = 1;
  Json bad = embedding_to_json(fixtures::diagonal_marking());
  bad["matrix"][0][0] = 7;  // breaks the form identity
  j["objects"]["broken"] = Json{{"type", "embedding"}, {"value", bad}};
  std::string bytes = canonical_dump(j);
  CHECK_THROWS_WITH_AS(workspace_roundtrip(bytes), doctest::Contains("broken"), SchemaError);
}

TEST_CASE("reports are deterministic") {
  Report r;
  r.command = {"lattice", "roots", "--norm", "-2"};
  r.inputs_digest = digest_of("payload");
  r.results = Json{{"count", 6}};
  std::string a = canonical_dump(report_to_json(r));
  std::string b = canonical_dump(report_to_json(r));
  CHECK(a == b);
  CHECK(a.find("seed") != std::string::npos);
}

TEST_CASE("oversized integers are rejected at the wire") {
  IMat big(1, 1);
  big(0, 0) = Int("123456789012345678901234567890");
  CHECK_THROWS_AS(imat_to_json(big), SchemaError);
}
