#include "enriq/serialize.hpp"

namespace enriq {

std::string canonical_dump(const Json& j) { return j.dump(); }

namespace {

Int int_from_json(const Json& j) {
  if (!j.is_number_integer()) throw SchemaError("expected an integer, got " + j.dump());
  return Int(static_cast<long>(j.get<std::int64_t>()));
}

Json int_to_json(const Int& v) { return Json(to_int64(v)); }

}  // namespace

Json imat_to_json(const IMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IMat imat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw SchemaError("matrix row count mismatch");
  IMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

Json lattice_to_json(const IntegerLattice& l) {
  Json j;
  j["rank"] = l.rank();
  j["gram"] = imat_to_json(l.gram());
  if (!l.label().empty()) j["label"] = l.label();
  return j;
}

IntegerLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
    throw SchemaError("lattice object requires rank and gram");
  std::size_t rank = j["rank"].get<std::size_t>();
  IMat gram = imat_from_json(j["gram"], rank, rank);
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SchemaError("lattice label must be a string");
    label = j["label"].get<std::string>();
  }
  try {
    return IntegerLattice(std::move(gram), std::move(label));
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid lattice: ") + e.what());
  }
}

Json embedding_to_json(const LatticeEmbedding& e) {
  Json j;
  j["source"] = lattice_to_json(e.source);
  j["target"] = lattice_to_json(e.target);
  j["matrix"] = imat_to_json(e.matrix);
  return j;
}

LatticeEmbedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("matrix"))
    throw SchemaError("embedding object requires source, target, matrix");
  IntegerLattice source = lattice_from_json(j["source"]);
  IntegerLattice target = lattice_from_json(j["target"]);
  IMat matrix = imat_from_json(j["matrix"], target.rank(), source.rank());
  try {
    return make_embedding(std::move(source), std::move(target), std::move(matrix));
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid embedding: ") + e.what());
  }
}

Json generatrix_to_json(const Subspace& g) {
  const FqTower& k = tower_for(g.space.p, g.m);
  Json j;
  j["p"] = g.space.p;
  j["m"] = g.m;
  j["dim"] = g.space.dim();
  Json gram = Json::array();
  for (std::size_t i = 0; i < g.space.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.space.dim(); ++c) row.push_back(g.space.gram(i, c));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  Json basis = Json::array();
  for (std::size_t i = 0; i < g.basis.rows; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.basis.cols; ++c) {
      Json coeffs = Json::array();
      for (long d : k.decode(g.basis.at(i, c))) coeffs.push_back(d);
      row.push_back(std::move(coeffs));
    }
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  return j;
}

Subspace generatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("m") || !j.contains("dim") ||
      !j.contains("gram") || !j.contains("basis"))
    throw SchemaError("generatrix object requires p, m, dim, gram, basis");
  long p = j["p"].get<long>();
  int m = j["m"].get<int>();
  std::size_t dim = j["dim"].get<std::size_t>();
  if (!j["gram"].is_array() || j["gram"].size() != dim) throw SchemaError("generatrix gram shape");
  Matrix<long> gram(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j["gram"][i].is_array() || j["gram"][i].size() != dim)
      throw SchemaError("generatrix gram shape");
    for (std::size_t c = 0; c < dim; ++c) gram(i, c) = j["gram"][i][c].get<long>();
  }
  FiniteQuadraticSpace space;
  try {
    space = make_space(p, std::move(gram));
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid generatrix form: ") + e.what());
  }
  const FqTower& tower = tower_for(p, m);
  const Json& basis = j["basis"];
  if (!basis.is_array()) throw SchemaError("generatrix basis must be an array");
  FqMat rows(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_array() || basis[i].size() != dim)
      throw SchemaError("generatrix basis row shape");
    for (std::size_t c = 0; c < dim; ++c) {
      const Json& entry = basis[i][c];
      if (!entry.is_array()) throw SchemaError("generatrix entry must be a coefficient list");
      std::vector<long> coeffs;
      for (const auto& v : entry) coeffs.push_back(v.get<long>());
      rows.at(i, c) = tower.encode(coeffs);
    }
  }
  try {
    return make_subspace(std::move(space), m, std::move(rows));
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid generatrix: ") + e.what());
  }
}

Json catalog_to_json(const EmbeddingCatalog& c) {
  Json j;
  j["sigma"] = c.sigma;
  j["p"] = c.p;
  Json markings = Json::array();
  for (const auto& m : c.markings) markings.push_back(embedding_to_json(m));
  j["markings"] = std::move(markings);
  Json over = Json::array();
  for (const auto& e : c.overlattices) {
    Json entry;
    entry["sigma_from"] = e.sigma_from;
    entry["sigma_to"] = e.sigma_to;
    entry["embedding"] = embedding_to_json(e.embedding);
    over.push_back(std::move(entry));
  }
  j["overlattice_embeddings"] = std::move(over);
  Json rc = Json::object();
  if (c.recorded.tau) rc["tau"] = *c.recorded.tau;
  if (c.recorded.epsilon) rc["epsilon"] = *c.recorded.epsilon;
  if (c.recorded.alpha) rc["alpha"] = *c.recorded.alpha;
  if (c.recorded.epsilon_c) rc["epsilon_c"] = *c.recorded.epsilon_c;
  if (c.recorded.epsilon_c_prev) rc["epsilon_c_prev"] = *c.recorded.epsilon_c_prev;
  j["recorded_counts"] = std::move(rc);
  return j;
}

EmbeddingCatalog catalog_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma") || !j.contains("p") || !j.contains("markings"))
    throw SchemaError("catalog object requires sigma, p, markings");
  EmbeddingCatalog c;
  c.sigma = j["sigma"].get<long>();
  c.p = j["p"].get<long>();
  for (const auto& m : j["markings"]) c.markings.push_back(embedding_from_json(m));
  if (j.contains("overlattice_embeddings"))
    for (const auto& e : j["overlattice_embeddings"]) {
      OverlatticeEntry entry;
      entry.sigma_from = e.at("sigma_from").get<long>();
      entry.sigma_to = e.at("sigma_to").get<long>();
      entry.embedding = embedding_from_json(e.at("embedding"));
      c.overlattices.push_back(std::move(entry));
    }
  if (j.contains("recorded_counts")) {
    const auto& rc = j["recorded_counts"];
    if (rc.contains("tau")) c.recorded.tau = rc["tau"].get<long>();
    if (rc.contains("epsilon")) c.recorded.epsilon = rc["epsilon"].get<long>();
    if (rc.contains("alpha")) c.recorded.alpha = rc["alpha"].get<long>();
    if (rc.contains("epsilon_c")) c.recorded.epsilon_c = rc["epsilon_c"].get<long>();
    if (rc.contains("epsilon_c_prev")) c.recorded.epsilon_c_prev = rc["epsilon_c_prev"].get<long>();
  }
  return c;
}

}  // namespace enriq
