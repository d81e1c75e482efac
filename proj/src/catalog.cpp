#include "enriq/catalog.hpp"

#include <map>
#include <numeric>

#include "enriq/roots.hpp"

namespace enriq {

namespace {

const IsometrySet& target_group(const OverlatticeEntry& entry,
                                std::map<IMat, IsometrySet>& cache, const IsometryLimits& limits) {
  const IMat& gram = entry.embedding.target.gram();
  auto it = cache.find(gram);
  if (it == cache.end()) it = cache.emplace(gram, isometry_group(entry.embedding.target, limits)).first;
  return it->second;
}

bool composed_complement_root_free(const LatticeEmbedding& j, const LatticeEmbedding& gamma) {
  LatticeEmbedding composed = compose_embeddings(j, gamma);
  auto [k, inc] = orthogonal_complement(composed);
  return !has_minus_two_root(k);
}

Ternary equivalent_impl(std::size_t i1, std::size_t i2, const EmbeddingCatalog& catalog,
                        std::map<IMat, IsometrySet>& groups, const IsometryLimits& limits) {
  if (i1 >= catalog.markings.size() || i2 >= catalog.markings.size())
    throw Error("embedding_equivalent: marking index out of range");
  const LatticeEmbedding& g1 = catalog.markings[i1];
  const LatticeEmbedding& g2 = catalog.markings[i2];
  bool saw_indeterminate = false;
  for (const auto& e1 : catalog.overlattices) {
    if (e1.sigma_from != catalog.sigma) continue;
    for (const auto& e2 : catalog.overlattices) {
      if (e2.sigma_from != catalog.sigma) continue;
      if (e1.sigma_to != e2.sigma_to) continue;
      if (!(e1.embedding.target == e2.embedding.target)) continue;
      if (!composed_complement_root_free(e1.embedding, g1)) continue;
      LatticeEmbedding c1 = compose_embeddings(e1.embedding, g1);
      LatticeEmbedding c2 = compose_embeddings(e2.embedding, g2);
      Ternary res = embeddings_isomorphic(c1, c2, target_group(e1, groups, limits));
      if (res == Ternary::True) return Ternary::True;
      if (res == Ternary::Indeterminate) saw_indeterminate = true;
    }
  }
  return saw_indeterminate ? Ternary::Indeterminate : Ternary::False;
}

}  // namespace

void validate_catalog(const EmbeddingCatalog& catalog) {
  for (std::size_t i = 0; i < catalog.markings.size(); ++i) {
    const auto& gamma = catalog.markings[i];
    if (i > 0 && !(gamma.source == catalog.markings[0].source))
      throw Error("catalog: markings must share one source lattice");
    if (!is_primitive(gamma))
      throw Error("catalog: marking " + std::to_string(i) + " is not primitive");
    // make_embedding already ran at construction; re-run the form identity.
    if (gamma.matrix.transposed() * gamma.target.gram() * gamma.matrix != gamma.source.gram())
      throw Error("catalog: marking " + std::to_string(i) + " violates the embedding invariant");
    auto [k, inc] = orthogonal_complement(gamma);
    if (has_minus_two_root(k))
      throw Error("catalog: marking " + std::to_string(i) +
                  " has a (-2)-vector in its complement");
    auto artin = artin_invariant(gamma.target, catalog.p);
    if (artin.sigma != catalog.sigma)
      throw Error("catalog: marking " + std::to_string(i) + " targets a lattice of sigma " +
                  std::to_string(artin.sigma) + ", catalog declares " +
                  std::to_string(catalog.sigma));
  }
  for (std::size_t i = 0; i < catalog.overlattices.size(); ++i) {
    const auto& e = catalog.overlattices[i];
    if (e.embedding.matrix.transposed() * e.embedding.target.gram() * e.embedding.matrix !=
        e.embedding.source.gram())
      throw Error("catalog: overlattice entry " + std::to_string(i) +
                  " violates the embedding invariant");
    if (artin_invariant(e.embedding.source, catalog.p).sigma != e.sigma_from)
      throw Error("catalog: overlattice entry " + std::to_string(i) + " sigma_from mismatch");
    if (artin_invariant(e.embedding.target, catalog.p).sigma != e.sigma_to)
      throw Error("catalog: overlattice entry " + std::to_string(i) + " sigma_to mismatch");
    if (e.sigma_to > e.sigma_from)
      throw Error("catalog: overlattice entry " + std::to_string(i) +
                  " increases the Artin invariant");
  }
}

Ternary embedding_equivalent(std::size_t i1, std::size_t i2, const EmbeddingCatalog& catalog,
                             const IsometryLimits& limits) {
  std::map<IMat, IsometrySet> groups;
  return equivalent_impl(i1, i2, catalog, groups, limits);
}

CensusReport component_census(const EmbeddingCatalog& catalog, const IsometryLimits& limits) {
  validate_catalog(catalog);
  CensusReport report;
  const std::size_t n = catalog.markings.size();
  report.irreducible = static_cast<long>(n);

  std::map<IMat, IsometrySet> groups;

  // connected components of the equivalence relation (union-find)
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Ternary res = equivalent_impl(i, j, catalog, groups, limits);
      if (res == Ternary::True) parent[find(i)] = find(j);
      if (res == Ternary::Indeterminate) report.connected_indeterminate = true;
    }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++classes;
  report.connected = static_cast<long>(classes);

  // alpha counts equivalence classes (entries deduped through ~) whose every
  // listed strictly-lower overlattice composition keeps a root. Being
  // alpha-type is a class invariant, so the class representative decides.
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    bool alpha_type = true;
    for (const auto& e : catalog.overlattices) {
      if (e.sigma_from != catalog.sigma || e.sigma_to >= catalog.sigma) continue;
      if (composed_complement_root_free(e.embedding, catalog.markings[i])) {
        alpha_type = false;
        break;
      }
    }
    if (alpha_type) ++report.alpha;
  }

  report.epsilon_c_lower = report.alpha;
  if (catalog.recorded.tau) {
    report.epsilon_upper = *catalog.recorded.tau * report.irreducible;
    if (catalog.recorded.epsilon_c_prev)
      report.epsilon_c_upper = *catalog.recorded.tau * (report.alpha + *catalog.recorded.epsilon_c_prev);
  }

  if (catalog.recorded.epsilon && report.epsilon_upper &&
      *catalog.recorded.epsilon > *report.epsilon_upper)
    report.violations.push_back("epsilon exceeds tau * |R|");
  if (catalog.recorded.epsilon_c) {
    if (*catalog.recorded.epsilon_c < report.epsilon_c_lower)
      report.violations.push_back("epsilon_c below alpha");
    if (report.epsilon_c_upper && *catalog.recorded.epsilon_c > *report.epsilon_c_upper)
      report.violations.push_back("epsilon_c exceeds tau * (alpha + epsilon_c_prev)");
  }
  if (catalog.recorded.alpha && *catalog.recorded.alpha != report.alpha)
    report.violations.push_back("recorded alpha differs from computed alpha");
  if (report.alpha > report.connected && !report.connected_indeterminate)
    report.violations.push_back("alpha exceeds the number of connected components");
  return report;
}

}  // namespace enriq
