// Command-line surface: every command prints a canonical, byte-stable JSON
// report on stdout (timing goes to stderr) and maps errors onto the
// documented exit codes: 0 ok, 1 domain error, 2 cap/indeterminate,
// 3 malformed input.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "enriq/catalog.hpp"
#include "enriq/isometry.hpp"
#include "enriq/marking.hpp"
#include "enriq/oracle.hpp"
#include "enriq/roots.hpp"
#include "enriq/serialize.hpp"
#include "enriq/workspace.hpp"

namespace {

using namespace enriq;

struct Inputs {
  std::string collected;  // raw bytes of everything read, for the digest

  std::string read_file(const std::string& path) {
    std::string bytes;
    if (path == "-") {
      std::ostringstream os;
      os << std::cin.rdbuf();
      bytes = os.str();
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw SchemaError("cannot open input file: " + path);
      std::ostringstream os;
      os << in.rdbuf();
      bytes = os.str();
    }
    collected += bytes;
    return bytes;
  }

  Json read_json(const std::string& path) {
    try {
      return Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
  }
};

Matrix<long> parse_inline_gram(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<long> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        entries.push_back(std::stol(cell));
      } catch (...) {
        throw SchemaError("bad gram entry: '" + cell + "'");
      }
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw SchemaError("empty gram");
  Matrix<long> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw SchemaError("ragged gram rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Json signature_json(const Signature& s) { return Json::array({s.n_plus, s.n_minus}); }

Json vectors_json(const std::vector<IMat>& vecs) {
  Json arr = Json::array();
  for (const auto& v : vecs) {
    Json row = Json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) row.push_back(to_int64(v(i, 0)));
    arr.push_back(std::move(row));
  }
  return arr;
}

Json matrices_json(const std::vector<IMat>& mats) {
  Json arr = Json::array();
  for (const auto& m : mats) arr.push_back(imat_to_json(m));
  return arr;
}

IntegerLattice load_lattice(Inputs& in, const std::string& path, const std::string& expr) {
  if (!expr.empty()) {
    in.collected += expr;
    return construct_standard(expr);
  }
  if (path.empty()) throw SchemaError("provide --in or --expr");
  return lattice_from_json(in.read_json(path));
}

GenFilter parse_filter(const std::string& name) {
  if (name == "isotropic") return GenFilter::Isotropic;
  if (name == "characteristic") return GenFilter::Characteristic;
  if (name == "strict") return GenFilter::Strict;
  throw SchemaError("unknown filter '" + name + "'");
}

int emit(const Inputs& in, const std::vector<std::string>& argv, const Json& results,
         std::chrono::steady_clock::time_point start, int code = 0) {
  Report r;
  r.command = argv;
  r.inputs_digest = digest_of(in.collected);
  r.results = results;
  std::cout << canonical_dump(report_to_json(r)) << "\n";
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count();
  std::cerr << "time_ms=" << ms << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> tokens(argv + 1, argv + argc);

  CLI::App app{"exact lattice / finite-form toolkit for supersingular Enriques periods"};
  app.require_subcommand(1);

  std::string in_path, expr, gram_text, filter_name = "characteristic";
  std::string gamma_path, lambda_path, g1_path, g2_path, gens_path, out_path;
  long p = 3;
  int m = 1;
  long norm = -2;
  std::size_t iso_k = 0;
  bool check_main = false;
  IsometryLimits limits;
  EnumLimits enum_limits;
  unsigned long cap_orbit = 100000;

  app.add_option("--cap-group", limits.element_cap, "isometry group element cap");
  app.add_option("--cap-rank", limits.rank_cap, "isometry group rank cap");
  app.add_option("--cap-grassmannian", enum_limits.grassmannian_budget,
                 "subspace enumeration budget");
  app.add_option("--cap-orbit", cap_orbit, "orbit expansion cap");

  auto* lattice = app.add_subcommand("lattice", "integer lattice operations");
  auto* lat_inv = lattice->add_subcommand("invariants", "rank, determinant, signature, divisors");
  auto* lat_roots = lattice->add_subcommand("roots", "vectors of a given negative norm");
  auto* lat_aut = lattice->add_subcommand("autgroup", "full isometry group (definite)");
  auto* lat_comp = lattice->add_subcommand("complement", "orthogonal complement of an embedding");
  auto* lat_sat = lattice->add_subcommand("saturate", "saturation and primitivity");
  auto* lat_glue = lattice->add_subcommand("glue", "overlattice from isotropic glue");
  for (auto* c : {lat_inv, lat_roots, lat_aut}) {
    c->add_option("--in", in_path, "lattice JSON file or -");
    c->add_option("--expr", expr, "lattice expression, e.g. sum(U,twist(E8,-1))");
  }
  lat_inv->add_option("--p", p, "odd prime for discriminant-group data");
  lat_roots->add_option("--norm", norm, "target norm (negative)");
  lat_comp->add_option("--in", in_path, "embedding JSON file or -")->required();
  lat_sat->add_option("--in", in_path, "embedding JSON file or -")->required();
  lat_glue->add_option("--in", in_path, "lattice JSON file or -");
  lat_glue->add_option("--expr", expr, "lattice expression");
  lat_glue->add_option("--p", p, "odd prime")->required();
  lat_glue->add_option("--lambda", lambda_path, "generatrix JSON file with the glue subspace")
      ->required();

  auto* form = app.add_subcommand("form", "finite quadratic form operations");
  auto* form_neutral = form->add_subcommand("neutral", "neutrality of a form over F_p");
  form_neutral->add_option("--p", p, "odd prime")->required();
  form_neutral->add_option("--gram", gram_text, "rows 'a,b;c,d'")->required();

  auto* gen = app.add_subcommand("gen", "generatrix operations");
  auto* gen_enum = gen->add_subcommand("enumerate", "census of middle-dimensional subspaces");
  gen_enum->add_option("--p", p)->required();
  gen_enum->add_option("--m", m, "extension degree")->required();
  gen_enum->add_option("--gram", gram_text)->required();
  gen_enum->add_option("--filter", filter_name, "isotropic | characteristic | strict");
  auto* gen_check = gen->add_subcommand("check", "predicates of one generatrix");
  gen_check->add_option("--in", in_path, "generatrix JSON file or -")->required();
  auto* gen_chain = gen->add_subcommand("chain", "chain vector and translate basis");
  gen_chain->add_option("--in", in_path, "generatrix JSON file or -")->required();

  auto* ctx = app.add_subcommand("ctx", "marking context operations");
  auto* ctx_build = ctx->add_subcommand("build", "stabilizer O(N,gamma) and N_0 data");
  auto* ctx_adm = ctx->add_subcommand("admissible", "Enriques admissibility report");
  auto* ctx_inv = ctx->add_subcommand("involution", "+1/-1 involution induced by the marking");
  for (auto* c : {ctx_build, ctx_adm, ctx_inv}) {
    c->add_option("--gamma", gamma_path, "embedding JSON file")->required();
    c->add_option("--p", p, "odd prime")->required();
  }

  auto* period = app.add_subcommand("period", "period points");
  auto* period_orbit = period->add_subcommand("orbit", "orbit partition of generatrices");
  period_orbit->add_option("--gamma", gamma_path)->required();
  period_orbit->add_option("--p", p)->required();
  period_orbit->add_option("--gens", gens_path, "JSON array of generatrices")->required();
  auto* period_cmp = period->add_subcommand("compare", "Torelli comparison of two generatrices");
  period_cmp->add_option("--gamma", gamma_path)->required();
  period_cmp->add_option("--p", p)->required();
  period_cmp->add_option("--g1", g1_path)->required();
  period_cmp->add_option("--g2", g2_path)->required();

  auto* census = app.add_subcommand("census", "component census of a catalog");
  census->add_option("--in", in_path, "catalog JSON file or -")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "independent brute-force reference suite");
  auto* o_box = oracle_cmd->add_subcommand("box-roots", "naive box-search root enumeration");
  o_box->add_option("--in", in_path);
  o_box->add_option("--expr", expr);
  o_box->add_option("--norm", norm);
  o_box->add_flag("--check-main", check_main, "also run the optimized path and compare");
  auto* o_iso = oracle_cmd->add_subcommand("iso-subspaces", "exhaustive isotropic search");
  o_iso->add_option("--p", p)->required();
  o_iso->add_option("--gram", gram_text)->required();
  o_iso->add_option("--k", iso_k, "subspace dimension (default dim/2)");
  o_iso->add_flag("--check-main", check_main);
  auto* o_gen = oracle_cmd->add_subcommand("gen-census", "filterless Grassmannian scan");
  o_gen->add_option("--p", p)->required();
  o_gen->add_option("--m", m)->required();
  o_gen->add_option("--gram", gram_text)->required();
  o_gen->add_flag("--check-main", check_main);
  auto* o_grp = oracle_cmd->add_subcommand("group-expand", "full isometry listing");
  o_grp->add_option("--in", in_path);
  o_grp->add_option("--expr", expr);
  o_grp->add_flag("--check-main", check_main);
  auto* o_orb = oracle_cmd->add_subcommand("orbit-brute", "orbit by full expansion");
  o_orb->add_option("--gamma", gamma_path)->required();
  o_orb->add_option("--p", p)->required();
  o_orb->add_option("--g", g1_path, "generatrix JSON file")->required();
  o_orb->add_flag("--check-main", check_main);

  auto* ws = app.add_subcommand("workspace", "workspace files");
  auto* ws_round = ws->add_subcommand("roundtrip", "load, validate, canonical save");
  ws_round->add_option("--in", in_path)->required();
  ws_round->add_option("--out", out_path, "output file (default stdout inside the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  Inputs in;
  try {
    Json results;

    if (lat_inv->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      results["rank"] = l.rank();
      results["determinant"] = to_int64(discriminant(l));
      results["even"] = l.is_even();
      results["signature"] = signature_json(signature(l));
      if (lat_inv->count("--p")) {
        auto d = discriminant_data(l, p);
        Json divisors = Json::array();
        for (const auto& v : d.elementary_divisors) divisors.push_back(to_int64(v));
        results["divisors"] = divisors;
        results["group_order"] = to_int64(d.group_order);
        results["p"] = p;
        results["p_elementary"] = d.p_elementary;
        results["p_length"] = d.p_length;
        if (d.p_elementary && l.is_even() && d.p_length % 2 == 0) {
          auto a = artin_invariant(l, p);
          results["artin_sigma"] = a.sigma;
          results["genuine_k3"] = a.genuine_k3;
        }
      }
    } else if (lat_roots->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      auto vecs = enumerate_norm_vectors(l, Int(norm));
      results["norm"] = norm;
      results["count"] = vecs.size();
      results["vectors"] = vectors_json(vecs);
    } else if (lat_aut->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      auto g = isometry_group(l, limits);
      results["order"] = *g.order;
      results["elements"] = matrices_json(g.generators);
    } else if (lat_comp->parsed()) {
      LatticeEmbedding e = embedding_from_json(in.read_json(in_path));
      auto [k, inc] = orthogonal_complement(e);
      results["lattice"] = lattice_to_json(k);
      results["embedding"] = embedding_to_json(inc);
    } else if (lat_sat->parsed()) {
      LatticeEmbedding e = embedding_from_json(in.read_json(in_path));
      results["index"] = to_int64(saturation_index(e));
      results["primitive"] = is_primitive(e);
      results["saturation"] = embedding_to_json(saturate(e));
    } else if (lat_glue->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      Subspace lambda = generatrix_from_json(in.read_json(lambda_path));
      Overlattice o = overlattice_from_glue(l, p, lambda);
      results["lattice"] = lattice_to_json(o.lattice);
      results["inclusion"] = embedding_to_json(o.inclusion);
      results["index"] = to_int64(abs(det_bareiss(o.inclusion.matrix)));
    } else if (form_neutral->parsed()) {
      in.collected += gram_text;
      auto space = make_space(p, parse_inline_gram(gram_text));
      results["p"] = p;
      results["dim"] = space.dim();
      results["nondegenerate"] = is_nondegenerate(space);
      results["det_mod_p"] = det_mod_p(space);
      results["neutral"] = is_neutral(space);
    } else if (gen_enum->parsed()) {
      in.collected += gram_text;
      auto space = make_space(p, parse_inline_gram(gram_text));
      auto found = enumerate_generatrices(space, m, parse_filter(filter_name), enum_limits);
      results["filter"] = filter_name;
      results["count"] = found.size();
      Json arr = Json::array();
      for (const auto& g : found) arr.push_back(generatrix_to_json(g));
      results["generatrices"] = arr;
    } else if (gen_check->parsed()) {
      Subspace g = generatrix_from_json(in.read_json(in_path));
      results["isotropic"] = is_totally_isotropic(g);
      bool ch = (g.rank() * 2 == g.space.dim()) && is_characteristic(g);
      results["characteristic"] = ch;
      results["strict"] = ch && is_strictly_characteristic(g);
      results["rational_dim"] = rational_part(g).rank();
      if (ch) results["artin_sigma"] = artin_invariant_of_generatrix(g);
    } else if (gen_chain->parsed()) {
      Subspace g = generatrix_from_json(in.read_json(in_path));
      auto chain = chain_vector(g);
      results["chain"] = generatrix_to_json(Subspace{g.space, g.m, chain.chain});
      results["translates"] = generatrix_to_json(Subspace{g.space, g.m, chain.translates});
    } else if (ctx_build->parsed() || ctx_adm->parsed() || ctx_inv->parsed()) {
      LatticeEmbedding gamma = embedding_from_json(in.read_json(gamma_path));
      MarkingContext c = build_marking_context(gamma.target, p, gamma, limits);
      if (ctx_build->parsed()) {
        results["context_id"] = c.id;
        results["sigma"] = c.sigma;
        results["genuine_k3"] = c.genuine_k3;
        results["stabilizer_order"] = *c.stabilizer.order;
        results["complement"] = lattice_to_json(c.complement);
        Json nz;
        nz["dim"] = c.nzero.space.dim();
        nz["neutral"] = c.nzero.neutral;
        Json gm = Json::array();
        for (std::size_t i = 0; i < c.nzero.space.dim(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < c.nzero.space.dim(); ++j)
            row.push_back(c.nzero.space.gram(i, j));
          gm.push_back(row);
        }
        nz["gram"] = gm;
        results["nzero"] = nz;
      } else if (ctx_adm->parsed()) {
        auto r = check_enriques_admissible(c);
        results["primitive"] = r.primitive;
        results["complement_root_free"] = r.complement_root_free;
        if (r.sigma_bound_ok)
          results["sigma_bound_ok"] = *r.sigma_bound_ok;
        else
          results["sigma_bound_ok"] = nullptr;
        results["admissible"] = r.admissible;
      } else {
        results["matrix"] = imat_to_json(induced_involution(c));
      }
    } else if (period_orbit->parsed()) {
      LatticeEmbedding gamma = embedding_from_json(in.read_json(gamma_path));
      MarkingContext c = build_marking_context(gamma.target, p, gamma, limits);
      Json arr = in.read_json(gens_path);
      if (!arr.is_array()) throw SchemaError("--gens must be a JSON array of generatrices");
      std::vector<Generatrix> gs;
      for (const auto& item : arr) gs.push_back(generatrix_from_json(item));
      auto orbits = orbit_generatrices(c, gs);
      Json out = Json::array();
      Json sizes = Json::array();
      for (const auto& orbit : orbits) {
        Json one = Json::array();
        for (const auto& g : orbit) one.push_back(generatrix_to_json(g));
        sizes.push_back(orbit.size());
        out.push_back(std::move(one));
      }
      results["orbits"] = out;
      results["sizes"] = sizes;
    } else if (period_cmp->parsed()) {
      LatticeEmbedding gamma = embedding_from_json(in.read_json(gamma_path));
      MarkingContext c = build_marking_context(gamma.target, p, gamma, limits);
      Generatrix g1 = generatrix_from_json(in.read_json(g1_path));
      Generatrix g2 = generatrix_from_json(in.read_json(g2_path));
      auto p1 = period_point(c, g1);
      auto p2 = period_point(c, g2);
      results["same_period"] = same_period(p1, p2);
      results["orbit_sizes"] = Json::array({p1.orbit_size, p2.orbit_size});
    } else if (census->parsed()) {
      EmbeddingCatalog cat = catalog_from_json(in.read_json(in_path));
      auto report = component_census(cat, limits);
      results["irreducible"] = report.irreducible;
      results["connected"] = report.connected;
      results["connected_indeterminate"] = report.connected_indeterminate;
      results["alpha"] = report.alpha;
      results["epsilon_upper"] = report.epsilon_upper ? Json(*report.epsilon_upper) : Json(nullptr);
      results["epsilon_c_lower"] = report.epsilon_c_lower;
      results["epsilon_c_upper"] =
          report.epsilon_c_upper ? Json(*report.epsilon_c_upper) : Json(nullptr);
      results["violations"] = report.violations;
      if (report.connected_indeterminate) return emit(in, tokens, results, start, 2);
    } else if (o_box->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      auto vecs = oracle::box_roots(l, Int(norm));
      results["oracle"] = "box-roots";
      results["count"] = vecs.size();
      results["vectors"] = vectors_json(vecs);
      if (check_main) {
        auto main_vecs = enumerate_norm_vectors(l, Int(norm));
        results["matches_main"] = (main_vecs == vecs);
      }
    } else if (o_iso->parsed()) {
      in.collected += gram_text;
      auto space = make_space(p, parse_inline_gram(gram_text));
      std::size_t k = o_iso->count("--k") ? iso_k : space.dim() / 2;
      auto subs = oracle::iso_subspaces(space, k);
      results["oracle"] = "iso-subspaces";
      results["k"] = k;
      results["count"] = subs.size();
      if (check_main && k == space.dim() / 2 && space.dim() % 2 == 0)
        results["matches_main"] = (is_neutral(space) == !subs.empty());
    } else if (o_gen->parsed()) {
      in.collected += gram_text;
      auto space = make_space(p, parse_inline_gram(gram_text));
      auto counts = oracle::gen_census(space, m, enum_limits.grassmannian_budget);
      results["oracle"] = "gen-census";
      results["total"] = counts.total;
      results["isotropic"] = counts.isotropic;
      results["characteristic"] = counts.characteristic;
      results["strict"] = counts.strict;
      if (check_main) {
        auto main_counts = enumerate_generatrices(space, m, GenFilter::Characteristic, enum_limits);
        results["matches_main"] = (main_counts.size() == counts.characteristic);
      }
    } else if (o_grp->parsed()) {
      IntegerLattice l = load_lattice(in, in_path, expr);
      auto elements = oracle::group_expand(l, limits.element_cap);
      results["oracle"] = "group-expand";
      results["order"] = elements.size();
      results["elements"] = matrices_json(elements);
      if (check_main) {
        auto g = isometry_group(l, limits);
        results["matches_main"] = (g.generators == elements);
      }
    } else if (o_orb->parsed()) {
      LatticeEmbedding gamma = embedding_from_json(in.read_json(gamma_path));
      MarkingContext c = build_marking_context(gamma.target, p, gamma, limits);
      Generatrix g = generatrix_from_json(in.read_json(g1_path));
      // independent stabilizer: full O(N) listing filtered by gamma-fixing
      auto all = oracle::group_expand(gamma.target, limits.element_cap);
      std::vector<IMat> stab;
      for (const auto& q : all)
        if (q * gamma.matrix == gamma.matrix) stab.push_back(q);
      auto orbit = oracle::orbit_brute(c, stab, g);
      if (orbit.size() > cap_orbit) throw CapError("orbit-brute: orbit cap exceeded");
      results["oracle"] = "orbit-brute";
      results["orbit_size"] = orbit.size();
      Json arr = Json::array();
      for (const auto& member : orbit) arr.push_back(generatrix_to_json(member));
      results["orbit"] = arr;
      if (check_main) {
        auto pt = period_point(c, g);
        results["matches_main"] =
            (pt.orbit_size == orbit.size() && pt.representative == orbit.front());
      }
    } else if (ws_round->parsed()) {
      std::string bytes = in.read_file(in_path);
      std::string canonical = workspace_roundtrip(bytes);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << canonical;
      }
      results["byte_identical"] = (canonical == bytes);
      results["canonical"] = Json::parse(canonical);
    } else {
      throw SchemaError("no command given");
    }

    return emit(in, tokens, results, start, 0);
  } catch (const SchemaError& e) {
    Json results;
    results["error"] = e.what();
    results["kind"] = "schema";
    return emit(in, tokens, results, start, 3);
  } catch (const CapError& e) {
    Json results;
    results["error"] = e.what();
    results["kind"] = "cap";
    return emit(in, tokens, results, start, 2);
  } catch (const Error& e) {
    Json results;
    results["error"] = e.what();
    results["kind"] = "domain";
    return emit(in, tokens, results, start, 1);
  } catch (const nlohmann::json::exception& e) {
    Json results;
    results["error"] = e.what();
    results["kind"] = "schema";
    return emit(in, tokens, results, start, 3);
  }
}
