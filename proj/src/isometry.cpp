#include "enriq/isometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "enriq/roots.hpp"

namespace enriq {

namespace {

// Collect all columns with <v,v> = norm for the (negative definite) working
// gram.
std::vector<IMat> norm_candidates(const IntegerLattice& l, const Int& norm,
                                  std::map<Int, std::vector<IMat>>& cache) {
  auto it = cache.find(norm);
  if (it != cache.end()) return it->second;
  auto vecs = enumerate_norm_vectors(l, norm);
  cache.emplace(norm, vecs);
  return vecs;
}

void backtrack(const IntegerLattice& l, const std::vector<std::vector<IMat>>& candidates,
               std::vector<IMat>& images, std::size_t level, std::vector<IMat>& out,
               unsigned long element_cap) {
  const std::size_t n = l.rank();
  if (level == n) {
    IMat q(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) q(i, j) = images[j](i, 0);
    out.push_back(std::move(q));
    if (out.size() > element_cap) throw CapError("isometry_group: element cap exceeded");
    return;
  }
  for (const IMat& v : candidates[level]) {
    bool ok = true;
    for (std::size_t j = 0; j < level; ++j)
      if (l.inner(v, images[j]) != l.gram()(level, j)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    images[level] = v;
    backtrack(l, candidates, images, level + 1, out, element_cap);
  }
}

}  // namespace

IsometrySet isometry_group(const IntegerLattice& l, const IsometryLimits& limits) {
  const std::size_t n = l.rank();
  if (n > limits.rank_cap)
    throw CapError("isometry_group: rank " + std::to_string(n) + " exceeds cap " +
                   std::to_string(limits.rank_cap));
  if (n == 0) {
    IsometrySet g{l, {IMat(0, 0)}, 1, limits.element_cap};
    return g;
  }
  auto sig = signature(l);
  if (sig.n_plus != 0 && sig.n_minus != 0) throw Error("isometry_group: lattice is indefinite");
  // Work on the negative definite form; the group is unchanged.
  IntegerLattice work = l;
  if (sig.n_minus == 0) {
    IMat neg = l.gram();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) neg(i, j) = -neg(i, j);
    work = IntegerLattice(std::move(neg));
  }

  std::map<Int, std::vector<IMat>> cache;
  std::vector<std::vector<IMat>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    candidates[i] = norm_candidates(work, work.gram()(i, i), cache);

  const auto& first = candidates[0];
  std::vector<std::vector<IMat>> per_first(first.size());
  bool cap_hit = false;
  const long fan = static_cast<long>(first.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < fan; ++k) {
    std::vector<IMat> images(n);
    images[0] = first[k];
    try {
      backtrack(work, candidates, images, 1, per_first[k], limits.element_cap);
    } catch (const CapError&) {
#pragma omp critical
      cap_hit = true;
    }
  }
  if (cap_hit) throw CapError("isometry_group: element cap exceeded");
  std::vector<IMat> elements;
  unsigned long total = 0;
  for (auto& block : per_first) {
    total += block.size();
    if (total > limits.element_cap) throw CapError("isometry_group: element cap exceeded");
    for (auto& q : block) elements.push_back(std::move(q));
  }
  std::sort(elements.begin(), elements.end());
  IsometrySet g{l, std::move(elements), total, limits.element_cap};
  return g;
}

std::vector<IMat> expand_group(const IsometrySet& g) {
  const std::size_t n = g.lattice.rank();
  std::set<IMat> seen;
  std::vector<IMat> queue;
  IMat id = IMat::identity(n);
  seen.insert(id);
  queue.push_back(id);
  for (const IMat& gen : g.generators) {
    if (gen.rows() != n || gen.cols() != n) throw Error("expand_group: generator shape mismatch");
    if (gen.transposed() * g.lattice.gram() * gen != g.lattice.gram())
      throw Error("expand_group: generator does not preserve the form");
    if (seen.insert(gen).second) queue.push_back(gen);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    IMat cur = queue[head];
    for (const IMat& gen : g.generators) {
      IMat prod = cur * gen;
      if (seen.insert(prod).second) {
        if (seen.size() > g.element_cap) throw CapError("expand_group: element cap exceeded");
        queue.push_back(std::move(prod));
      }
    }
  }
  return std::vector<IMat>(seen.begin(), seen.end());
}

Ternary embeddings_isomorphic(const LatticeEmbedding& j1, const LatticeEmbedding& j2,
                              const IsometrySet& group) {
  if (!(j1.source == j2.source) || !(j1.target == j2.target))
    throw Error("embeddings_isomorphic: embeddings do not share source and target");
  if (!(group.lattice == j1.target))
    throw Error("embeddings_isomorphic: group acts on a different lattice");
  const std::size_t n = j1.target.rank();
  std::set<IMat> seen;
  std::vector<IMat> queue;
  IMat id = IMat::identity(n);
  seen.insert(id);
  queue.push_back(id);
  auto witness = [&](const IMat& alpha) { return alpha * j1.matrix == j2.matrix; };
  if (witness(id)) return Ternary::True;
  for (const IMat& gen : group.generators)
    if (seen.insert(gen).second) {
      if (witness(gen)) return Ternary::True;
      queue.push_back(gen);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    IMat cur = queue[head];
    for (const IMat& gen : group.generators) {
      IMat prod = cur * gen;
      if (seen.insert(prod).second) {
        if (witness(prod)) return Ternary::True;
        if (seen.size() > group.element_cap) return Ternary::Indeterminate;
        queue.push_back(std::move(prod));
      }
    }
  }
  return Ternary::False;
}

}  // namespace enriq
