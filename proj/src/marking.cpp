#include "enriq/marking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "enriq/roots.hpp"

namespace enriq {

namespace {

std::string context_digest(const IntegerLattice& n, long p, const LatticeEmbedding& gamma) {
  std::ostringstream os;
  os << p << '|';
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t j = 0; j < n.rank(); ++j) os << n.gram()(i, j) << ',';
  os << '|';
  for (std::size_t i = 0; i < gamma.matrix.rows(); ++i)
    for (std::size_t j = 0; j < gamma.matrix.cols(); ++j) os << gamma.matrix(i, j) << ',';
  std::ostringstream id;
  id << "ctx-" << std::hex << fnv1a(os.str());
  return id.str();
}

// phi = P . blockdiag(psi_image, psi_complement) . P^{-1} where the columns
// of P are the gamma image followed by the complement basis.
QMat block_extension(const LatticeEmbedding& gamma, const IMat& complement_basis,
                     const QMat& p_inv, const IMat& psi_image, const IMat& psi_complement) {
  const std::size_t n = gamma.target.rank();
  const std::size_t s = gamma.matrix.cols();
  const std::size_t k = complement_basis.cols();
  IMat ip = gamma.matrix * psi_image;          // n x s
  IMat kp = complement_basis * psi_complement;  // n x k
  QMat pd(n, s + k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) pd(i, j) = Rat(ip(i, j));
    for (std::size_t j = 0; j < k; ++j) pd(i, s + j) = Rat(kp(i, j));
  }
  return pd * p_inv;
}

QMat basis_inverse(const LatticeEmbedding& gamma, const IMat& complement_basis) {
  const std::size_t n = gamma.target.rank();
  const std::size_t s = gamma.matrix.cols();
  const std::size_t k = complement_basis.cols();
  if (s + k != n) throw Error("marking: image and complement do not span the ambient");
  QMat p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) p(i, j) = Rat(gamma.matrix(i, j));
    for (std::size_t j = 0; j < k; ++j) p(i, s + j) = Rat(complement_basis(i, j));
  }
  return inverse_rational(p);
}

}  // namespace

MarkingContext build_marking_context(const IntegerLattice& n, long p, const LatticeEmbedding& gamma,
                                     const IsometryLimits& limits) {
  if (!(gamma.target == n)) throw Error("build_marking_context: gamma does not target N");
  MarkingContext ctx;
  ctx.ambient = n;
  ctx.p = p;
  ctx.gamma = gamma;
  auto [k, inc] = orthogonal_complement(gamma);
  ctx.complement = k;
  ctx.complement_inclusion = inc;
  ctx.complement_group = isometry_group(k, limits);
  ctx.nzero = dual_quotient_form(n, p);
  auto artin = artin_invariant(n, p);
  ctx.sigma = artin.sigma;
  ctx.genuine_k3 = artin.genuine_k3;
  ctx.id = context_digest(n, p, gamma);

  QMat p_inv = basis_inverse(gamma, inc.matrix);
  IMat id_s = IMat::identity(gamma.matrix.cols());
  std::vector<IMat> elements;
  for (const IMat& psi : ctx.complement_group.generators) {
    QMat ext = block_extension(gamma, inc.matrix, p_inv, id_s, psi);
    if (!is_integral(ext)) continue;
    IMat phi = to_integral(ext);
    if (phi.transposed() * n.gram() * phi != n.gram())
      throw Error("build_marking_context: extension fails to preserve the form (internal)");
    elements.push_back(std::move(phi));
  }
  std::sort(elements.begin(), elements.end());
  ctx.stabilizer = IsometrySet{n, std::move(elements),
                               static_cast<unsigned long>(elements.size()), limits.element_cap};
  ctx.stabilizer.order = static_cast<unsigned long>(ctx.stabilizer.generators.size());
  return ctx;
}

AdmissibilityReport check_enriques_admissible(const MarkingContext& ctx) {
  AdmissibilityReport r;
  r.primitive = is_primitive(ctx.gamma);
  r.complement_root_free = !has_minus_two_root(ctx.complement);
  r.admissible = r.primitive && r.complement_root_free;
  if (ctx.genuine_k3) {
    r.sigma_bound_ok = (ctx.sigma <= 5);
    r.admissible = r.admissible && *r.sigma_bound_ok;
  }
  return r;
}

IMat induced_involution(const MarkingContext& ctx) {
  QMat p_inv = basis_inverse(ctx.gamma, ctx.complement_inclusion.matrix);
  IMat id_s = IMat::identity(ctx.gamma.matrix.cols());
  IMat neg_k = IMat::identity(ctx.complement.rank());
  for (std::size_t i = 0; i < neg_k.rows(); ++i) neg_k(i, i) = -1;
  QMat ext = block_extension(ctx.gamma, ctx.complement_inclusion.matrix, p_inv, id_s, neg_k);
  if (!is_integral(ext)) {
    for (std::size_t i = 0; i < ext.rows(); ++i)
      for (std::size_t j = 0; j < ext.cols(); ++j)
        if (ext(i, j).get_den() != 1)
          throw Error("induced_involution: extension not integral, denominator " +
                      ext(i, j).get_den().get_str() + " at entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  IMat iota = to_integral(ext);
  if (iota * iota != IMat::identity(ctx.ambient.rank()))
    throw Error("induced_involution: result is not an involution (internal)");
  return iota;
}

Matrix<long> induced_action_on_nzero(const MarkingContext& ctx, const IMat& phi) {
  const IntegerLattice& n = ctx.ambient;
  if (phi.transposed() * n.gram() * phi != n.gram())
    throw Error("act_on_generatrix: phi is not an isometry of N");
  const std::size_t d = ctx.nzero.space.dim();
  Matrix<long> action(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    IMat w = phi * ctx.nzero.basis.col(c);
    IMat x = ctx.nzero.v_inv * w;
    for (std::size_t r = 0; r < d; ++r) {
      Int val = x(ctx.nzero.p_positions[r], 0) % ctx.p;
      if (val < 0) val += ctx.p;
      action(r, c) = to_long(val);
    }
  }
  return action;
}

Generatrix act_on_generatrix(const MarkingContext& ctx, const IMat& phi, const Generatrix& g) {
  if (!(g.space == ctx.nzero.space))
    throw Error("act_on_generatrix: generatrix does not live in this context's N_0");
  Matrix<long> action = induced_action_on_nzero(ctx, phi);
  const FqTower& k = tower_for(g.space.p, g.m);
  const std::size_t d = g.space.dim();
  // Rows are coordinate vectors; the column action x -> A x becomes
  // row -> row A^T.
  FqMat at(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) at.at(i, j) = k.from_base(action(j, i));
  FqMat nb = fq_mul(k, g.basis, at);
  fq_rref(k, nb, true);
  return Generatrix{g.space, g.m, std::move(nb)};
}

std::vector<std::vector<Generatrix>> orbit_generatrices(const MarkingContext& ctx,
                                                        const std::vector<Generatrix>& gs) {
  std::map<Generatrix, std::vector<Generatrix>> by_min;
  std::set<Generatrix> pending(gs.begin(), gs.end());
  while (!pending.empty()) {
    Generatrix seed = *pending.begin();
    std::set<Generatrix> orbit;
    for (const IMat& phi : ctx.stabilizer.generators) orbit.insert(act_on_generatrix(ctx, phi, seed));
    orbit.insert(seed);
    std::vector<Generatrix> members;
    for (const Generatrix& g : orbit) {
      auto it = pending.find(g);
      if (it != pending.end()) {
        members.push_back(g);
        pending.erase(it);
      }
    }
    by_min.emplace(*orbit.begin(), std::move(members));
  }
  std::vector<std::vector<Generatrix>> out;
  for (auto& [min, members] : by_min) out.push_back(std::move(members));
  return out;
}

PeriodPoint period_point(const MarkingContext& ctx, const Generatrix& g) {
  if (!is_characteristic(g)) throw Error("period_point: generatrix is not characteristic");
  std::set<Generatrix> orbit;
  orbit.insert(g);
  for (const IMat& phi : ctx.stabilizer.generators) orbit.insert(act_on_generatrix(ctx, phi, g));
  PeriodPoint pt;
  pt.context_id = ctx.id;
  pt.representative = *orbit.begin();
  pt.orbit_size = orbit.size();
  return pt;
}

bool same_period(const PeriodPoint& a, const PeriodPoint& b) {
  if (a.context_id != b.context_id) throw Error("same_period: points from different contexts");
  return a.representative == b.representative;
}

std::optional<IMat> extend_isometry(const MarkingContext& ctx, const IMat& psi) {
  const IntegerLattice& src = ctx.gamma.source;
  if (psi.rows() != src.rank() || psi.cols() != src.rank())
    throw Error("extend_isometry: psi shape mismatch");
  if (psi.transposed() * src.gram() * psi != src.gram())
    throw Error("extend_isometry: psi does not preserve the image form");
  QMat p_inv = basis_inverse(ctx.gamma, ctx.complement_inclusion.matrix);
  for (const IMat& cand : ctx.complement_group.generators) {
    QMat ext = block_extension(ctx.gamma, ctx.complement_inclusion.matrix, p_inv, psi, cand);
    if (!is_integral(ext)) continue;
    IMat phi = to_integral(ext);
    if (phi.transposed() * ctx.ambient.gram() * phi != ctx.ambient.gram())
      throw Error("extend_isometry: extension fails to preserve the form (internal)");
    return phi;
  }
  return std::nullopt;
}

}  // namespace enriq
