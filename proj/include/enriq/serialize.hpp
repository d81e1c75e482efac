#pragma once

#include <json.hpp>
#include <string>

#include "enriq/catalog.hpp"
#include "enriq/generatrix.hpp"
#include "enriq/lattice.hpp"

namespace enriq {

using Json = nlohmann::json;

/// Canonical serialization: sorted keys (nlohmann's default object order),
/// no insignificant whitespace, decimal integers only. Byte-stable.
std::string canonical_dump(const Json& j);

Json lattice_to_json(const IntegerLattice& l);
IntegerLattice lattice_from_json(const Json& j);

Json embedding_to_json(const LatticeEmbedding& e);
LatticeEmbedding embedding_from_json(const Json& j);

Json generatrix_to_json(const Subspace& g);
Subspace generatrix_from_json(const Json& j);

Json catalog_to_json(const EmbeddingCatalog& c);
EmbeddingCatalog catalog_from_json(const Json& j);

Json imat_to_json(const IMat& m);
IMat imat_from_json(const Json& j, std::size_t rows, std::size_t cols);

}  // namespace enriq
