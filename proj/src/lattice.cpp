#include "enriq/lattice.hpp"

#include <cctype>
#include <utility>

namespace enriq {

IntegerLattice::IntegerLattice(IMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_symmetric()) throw Error("lattice: gram matrix not symmetric");
  if (det_bareiss(gram_) == 0) throw Error("lattice: gram matrix is degenerate");
}

bool IntegerLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Int IntegerLattice::inner(const IMat& x, const IMat& y) const {
  if (x.rows() != rank() || y.rows() != rank() || x.cols() != 1 || y.cols() != 1)
    throw Error("lattice inner product: vector shape mismatch");
  return (x.transposed() * gram_ * y)(0, 0);
}

LatticeEmbedding make_embedding(IntegerLattice source, IntegerLattice target, IMat matrix) {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw Error("embedding: matrix shape mismatch");
  if (matrix.transposed() * target.gram() * matrix != source.gram())
    throw Error("embedding: form compatibility violated");
  return LatticeEmbedding{std::move(source), std::move(target), std::move(matrix)};
}

LatticeEmbedding identity_embedding(const IntegerLattice& l) {
  return LatticeEmbedding{l, l, IMat::identity(l.rank())};
}

namespace {

IMat gram_u() { return IMat(2, 2, {0, 1, 1, 0}); }
IMat gram_a1() { return IMat(1, 1, {2}); }
IMat gram_a2() { return IMat(2, 2, {2, -1, -1, 2}); }

IMat gram_d4() {
  // Bourbaki numbering: node 2 is the branch node.
  return IMat(4, 4,
              {2, -1, 0, 0,   //
               -1, 2, -1, -1,  //
               0, -1, 2, 0,   //
               0, -1, 0, 2});
}

IMat gram_e8() {
  // Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 attached to node 4.
  IMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto edge = [&g](std::size_t a, std::size_t b) {
    g(a, b) = -1;
    g(b, a) = -1;
  };
  edge(0, 2);
  edge(2, 3);
  edge(3, 4);
  edge(4, 5);
  edge(5, 6);
  edge(6, 7);
  edge(1, 3);
  return g;
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw SchemaError("lattice expression: expected '" + std::string(1, c) + "' at position " +
                        std::to_string(pos));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    if (start == pos) throw SchemaError("lattice expression: expected a name at position " +
                                        std::to_string(pos));
    return s.substr(start, pos - start);
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw SchemaError("lattice expression: expected an integer at position " +
                        std::to_string(start));
    return Int(s.substr(start, pos - start));
  }

  IMat expr() {
    std::string name = ident();
    if (name == "U") return gram_u();
    if (name == "A1") return gram_a1();
    if (name == "A2") return gram_a2();
    if (name == "D4") return gram_d4();
    if (name == "E8") return gram_e8();
    if (name == "diag") {
      expect('(');
      std::vector<Int> entries;
      entries.push_back(integer());
      while (eat(',')) entries.push_back(integer());
      expect(')');
      IMat g(entries.size(), entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
      return g;
    }
    if (name == "twist") {
      expect('(');
      IMat inner = expr();
      expect(',');
      Int n = integer();
      expect(')');
      if (n == 0) throw SchemaError("lattice expression: twist by 0");
      for (std::size_t i = 0; i < inner.rows(); ++i)
        for (std::size_t j = 0; j < inner.cols(); ++j) inner(i, j) *= n;
      return inner;
    }
    if (name == "sum") {
      expect('(');
      IMat a = expr();
      expect(',');
      IMat b = expr();
      expect(')');
      IMat g(a.rows() + b.rows(), a.cols() + b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = a(i, j);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) g(a.rows() + i, a.cols() + j) = b(i, j);
      return g;
    }
    throw SchemaError("lattice expression: unknown constructor '" + name + "'");
  }
};

}  // namespace

IntegerLattice construct_standard(const std::string& expr) {
  Parser parser{expr};
  IMat g = parser.expr();
  parser.skip_ws();
  if (parser.pos != expr.size())
    throw SchemaError("lattice expression: trailing input at position " +
                      std::to_string(parser.pos));
  return IntegerLattice(std::move(g), expr);
}

Int discriminant(const IntegerLattice& l) { return det_bareiss(l.gram()); }

Signature signature(const IntegerLattice& l) { return signature_of(l.gram()); }

DiscriminantData discriminant_data(const IntegerLattice& l, long p) {
  if (p < 3 || p % 2 == 0) throw Error("discriminant_data: p must be an odd prime");
  auto snf = smith_normal_form(l.gram());
  DiscriminantData d;
  d.group_order = 1;
  d.p_elementary = true;
  for (const Int& div : snf.divisors) {
    d.elementary_divisors.push_back(div);
    d.group_order *= abs(div);
    if (div != 1 && div != p) d.p_elementary = false;
    if (div == p) ++d.p_length;
  }
  return d;
}

ArtinResult artin_invariant(const IntegerLattice& l, long p) {
  if (!l.is_even()) throw Error("artin_invariant: lattice is not even");
  auto d = discriminant_data(l, p);
  if (!d.p_elementary) throw Error("artin_invariant: lattice is not p-elementary");
  if (d.p_length % 2 != 0)
    throw Error("artin_invariant: odd p-length " + std::to_string(d.p_length));
  ArtinResult r;
  r.sigma = d.p_length / 2;
  if (l.rank() == 22) {
    auto sig = signature(l);
    if (sig.n_plus == 1 && sig.n_minus == 21) {
      Int expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(2 * r.sigma));
      if (discriminant(l) != -expected)
        throw Error("artin_invariant: rank-22 (1,21) lattice with d != -p^(2 sigma)");
      r.genuine_k3 = (r.sigma >= 1 && r.sigma <= 10);
    }
  }
  return r;
}

DualQuotient dual_quotient_form(const IntegerLattice& l, long p) {
  if (!l.is_even()) throw Error("dual_quotient_form: lattice is not even");
  auto dd = discriminant_data(l, p);
  if (!dd.p_elementary) throw Error("dual_quotient_form: lattice is not p-elementary");
  auto snf = smith_normal_form(l.gram());
  DualQuotient dq;
  for (std::size_t i = 0; i < snf.divisors.size(); ++i)
    if (snf.divisors[i] == p) dq.p_positions.push_back(i);
  const std::size_t n = l.rank();
  const std::size_t d = dq.p_positions.size();
  dq.basis = IMat(n, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < n; ++r) dq.basis(r, c) = snf.v(r, dq.p_positions[c]);
  dq.v_inv = inverse_unimodular(snf.v);
  Matrix<long> gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Int pairing = (dq.basis.col(i).transposed() * l.gram() * dq.basis.col(j))(0, 0);
      if (pairing % p != 0) throw Error("dual_quotient_form: pairing not divisible by p");
      Int reduced = (pairing / p) % p;
      if (reduced < 0) reduced += p;
      gram(i, j) = to_long(reduced);
    }
  dq.space = make_space(p, std::move(gram));
  if (!is_nondegenerate(dq.space)) throw Error("dual_quotient_form: induced form degenerate");
  dq.neutral = is_neutral(dq.space);
  return dq;
}

std::pair<IntegerLattice, LatticeEmbedding> orthogonal_complement(const LatticeEmbedding& emb) {
  IMat pairings = emb.matrix.transposed() * emb.target.gram();  // s x t
  IMat basis = kernel_columns(pairings);                        // t x k, canonical
  IMat gram = basis.transposed() * emb.target.gram() * basis;
  IntegerLattice k(gram);
  LatticeEmbedding inc = make_embedding(k, emb.target, basis);
  return {std::move(k), std::move(inc)};
}

namespace {

IMat saturation_basis(const LatticeEmbedding& emb) {
  // Saturation = double dot-orthogonal: integer kernels are saturated.
  IMat y = kernel_columns(emb.matrix.transposed());
  return kernel_columns(y.transposed());
}

}  // namespace

LatticeEmbedding saturate(const LatticeEmbedding& emb) {
  IMat basis = saturation_basis(emb);
  IMat gram = basis.transposed() * emb.target.gram() * basis;
  return make_embedding(IntegerLattice(gram), emb.target, basis);
}

Int saturation_index(const LatticeEmbedding& emb) {
  IMat basis = saturation_basis(emb);
  auto x = solve_rational(to_rational(basis), to_rational(emb.matrix));
  if (!x || !is_integral(*x))
    throw Error("saturation_index: image does not lie in its saturation (internal)");
  return abs(det_bareiss(to_integral(*x)));
}

bool is_primitive(const LatticeEmbedding& emb) { return saturation_index(emb) == 1; }

LatticeEmbedding compose_embeddings(const LatticeEmbedding& j, const LatticeEmbedding& gamma) {
  if (!(j.source == gamma.target))
    throw Error("compose_embeddings: source of j differs from target of gamma");
  return make_embedding(gamma.source, j.target, j.matrix * gamma.matrix);
}

Overlattice overlattice_from_glue(const IntegerLattice& l, long p, const Subspace& lambda) {
  DualQuotient dq = dual_quotient_form(l, p);
  if (!(lambda.space == dq.space))
    throw Error("overlattice_from_glue: Lambda does not live in N_0 of the lattice");
  const FqTower& tower = tower_for(lambda.space.p, lambda.m);
  for (Fq v : lambda.basis.data)
    if (!tower.in_base(v))
      throw Error("overlattice_from_glue: Lambda is not defined over the prime field");
  if (!is_totally_isotropic(lambda))
    throw Error("overlattice_from_glue: Lambda is not totally isotropic");

  const std::size_t n = l.rank();
  const std::size_t r = lambda.rank();
  // Generators of p N(s): p e_i and the lifted glue vectors.
  IMat gens(n, n + r);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = p;
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      Int acc = 0;
      for (std::size_t d = 0; d < dq.space.dim(); ++d)
        acc += Int(tower.to_base(lambda.basis.at(c, d))) * dq.basis(i, d);
      gens(i, n + c) = acc;
    }
  IMat scaled_basis = canonical_column_basis(gens);  // basis of p N(s)
  if (scaled_basis.cols() != n) throw Error("overlattice_from_glue: basis rank defect (internal)");
  IMat scaled_gram = scaled_basis.transposed() * l.gram() * scaled_basis;
  Int p2 = Int(p) * Int(p);
  IMat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (scaled_gram(i, j) % p2 != 0)
        throw Error("overlattice_from_glue: glue is not integral (internal)");
      gram(i, j) = scaled_gram(i, j) / p2;
    }
  IntegerLattice overlattice{IMat(gram)};
  if (!overlattice.is_even()) throw Error("overlattice_from_glue: result is not even");
  // L in the overlattice basis: columns of p * scaled_basis^{-1}.
  QMat inv = inverse_rational(to_rational(scaled_basis));
  QMat incq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) incq(i, j) = inv(i, j) * p;
  if (!is_integral(incq)) throw Error("overlattice_from_glue: inclusion not integral (internal)");
  LatticeEmbedding inc = make_embedding(l, overlattice, to_integral(incq));
  return Overlattice{std::move(overlattice), std::move(inc)};
}

}  // namespace enriq
