// Command-line front end: checks, dual solver, morphisms and catalog certification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lsb/catalog.hpp"

using namespace lsb;

namespace {

struct Options {
  std::string format = "text";
  std::string data_dir;
  std::vector<std::string> at;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Catalog& catalog(const Options& o) {
  static std::optional<Catalog> cat;
  if (!cat) cat = o.data_dir.empty() ? Catalog::load_default() : Catalog::load(o.data_dir);
  return *cat;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// `--at p=1/2` values
Assignment assignment(const Options& o) {
  Assignment a;
  for (auto& s : o.at) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Failure("--at expects NAME=VALUE, got '" + s + "'");
    a[s.substr(0, eq)] = GScalar::parse(s.substr(eq + 1));
  }
  return a;
}

// A catalog id or alias, or a definition file holding exactly one algebra.
SymbolicAlgebra resolve_algebra(const Options& o, const std::string& id) {
  if (std::filesystem::is_regular_file(id)) return parse_algebra(slurp(id), id);
  return catalog(o).algebra(id);
}

// Fixes the --at parameters; the rest stay symbolic.
SymbolicAlgebra fix_params(const SymbolicAlgebra& g, const Assignment& a) {
  if (a.empty()) return g;
  SymbolicAlgebra out(g.name(), g.dims(), g.tensor().map([&](const MultiPoly& p) { return p.substitute(a); }));
  out.labels = g.labels;
  for (auto& p : g.params)
    if (!a.count(p.name)) out.params.push_back(p);
  return out;
}

LieSuperAlgebra numeric(const SymbolicAlgebra& g, const std::string& what) {
  auto n = as_numeric(g);
  if (!n) throw Failure(what + " has free parameters; fix them with --at NAME=VALUE");
  return *n;
}

// Statements in the primal's generator names, or with --as-dual an algebra id/file read as the dual.
SymbolicDual resolve_dual(const Options& o, const SymbolicAlgebra& primal, const std::string& spec, bool as_dual_role) {
  if (as_dual_role) {
    auto g = fix_params(resolve_algebra(o, spec), assignment(o));
    if (!(g.dims() == primal.dims())) throw Failure("dual '" + spec + "' has dims " + g.dims().str());
    return as_dual(g);
  }
  bool is_file = std::filesystem::is_regular_file(spec);
  auto d = parse_dual_spec(is_file ? slurp(spec) : spec, primal, {}, is_file ? spec : "<dual>");
  return SymbolicDual(d.name(), d.dims(), d.tensor().map([&](const MultiPoly& p) { return p.substitute(assignment(o)); }));
}

// A matrix literal, or a file holding one.
SuperMatrix matrix_arg(const Options& o, const std::string& text, GradedDims dims) {
  if (std::filesystem::is_regular_file(text))
    return evaluate_matrix(parse_matrix_literal(slurp(text), text), dims, assignment(o));
  return evaluate_matrix(parse_matrix_literal(text), dims, assignment(o));
}

std::string residual_where(const Residual<GScalar>& r) {
  if (r.zero()) return "";
  auto& ix = r.nonzero.front().index;
  return "first at (" + std::to_string(ix[0] + 1) + "," + std::to_string(ix[1] + 1) + "," + std::to_string(ix[2] + 1) +
         ")";
}

CheckRecord morphism_record(const std::string& who, const std::string& check, const MorphismCheck& m) {
  CheckRecord r{who, check, m.residual.count(), m.ok ? "pass" : "fail", residual_where(m.residual)};
  for (auto& d : m.diagnostics) r.detail += (r.detail.empty() ? "" : "; ") + d;
  return r;
}

int emit(const Options& o, const Report& rep, const std::string& extra_text = "") {
  if (o.format == "records") {
    std::cout << rep.as_records();
  } else {
    std::cout << extra_text << rep.text();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_check(const Options& o, const std::string& target) {
  Report rep;
  auto a = assignment(o);
  if (std::filesystem::is_regular_file(target)) {
    for (auto& g : parse_algebra_file(slurp(target), target).algebras)
      rep.append(verify_algebra(g.name(), fix_params(g, a)));
  } else {
    rep.append(verify_algebra(target, fix_params(catalog(o).algebra(target), a)));
  }
  return emit(o, rep);
}

int cmd_duals(const Options& o, const std::string& id) {
  auto g = fix_params(resolve_algebra(o, id), assignment(o));
  auto fam = solve_duals(g);
  Report rep;
  rep.records.push_back({id, "solve_duals", 0, "pass",
                         "nullity " + std::to_string(fam.nullity()) + ", " + std::to_string(fam.quad_constraints.size()) +
                             " constraints, " + std::to_string(fam.branches.size()) + " branches"});
  return emit(o, rep, fam.str());
}

int cmd_pair(const Options& o, const std::string& id, const std::string& spec, bool as_dual_role) {
  auto g = fix_params(resolve_algebra(o, id), assignment(o));
  auto d = resolve_dual(o, g, spec, as_dual_role);
  return emit(o, verify_bialgebra(id, g, d));
}

int cmd_double(const Options& o, const std::string& id, const std::string& spec, bool as_dual_role, bool emit_def) {
  auto g = fix_params(resolve_algebra(o, id), assignment(o));
  auto d = resolve_dual(o, g, spec, as_dual_role);
  auto gn = numeric(g, id);
  auto dn = as_numeric(d);
  if (!dn) throw Failure("the dual has free parameters; fix them with --at NAME=VALUE");
  auto D = build_double(gn, *dn);
  D.algebra.set_name("D_" + gn.name());
  Report rep;
  auto sj = super_jacobi_residual(D.algebra);
  auto ad = pairing_ad_invariance(D);
  rep.records.push_back({D.algebra.name(), "inputs", 0, D.inputs_valid ? "pass" : "fail",
                         D.inputs_valid ? "" : "the pair fails the bialgebra identities"});
  rep.records.push_back({D.algebra.name(), "double_sj", sj.count(), sj.zero() ? "pass" : "fail", residual_where(sj)});
  rep.records.push_back({D.algebra.name(), "ad_invariance", ad.count(), ad.zero() ? "pass" : "fail", ""});
  if (emit_def && o.format == "text") {
    std::cout << print_algebra(lift(D.algebra));
    return rep.ok() ? 0 : 1;
  }
  return emit(o, rep);
}

int cmd_aut(const Options& o, const std::string& id, const std::string& matrix, bool family_verify) {
  Report rep;
  if (family_verify) {
    auto* rec = catalog(o).automorphisms_of(id);
    if (!rec) throw UnknownId("no automorphism family for '" + id + "'");
    const auto& g = catalog(o).algebra(id);
    std::vector<ParamDecl> decls = rec->params;
    for (auto& p : g.params) decls.push_back(p);
    size_t tested = 0, failed = 0;
    std::string first;
    for (auto& a : sample_grid(decls)) {
      if (!rec->family.admissible(a)) continue;
      ++tested;
      auto M = rec->family.at(a);
      auto check = verify_automorphism(specialize(g, a), M);
      bool member = aut_membership(rec->family, M).has_value();
      if (!check || !member) {
        ++failed;
        if (first.empty()) first = "failed at " + matrix_str(M);
      }
    }
    rep.records.push_back({id, "automorphism family", failed, failed == 0 && tested > 0 ? "pass" : "fail",
                           first.empty() ? std::to_string(tested) + " admissible samples" : first});
    return emit(o, rep);
  }
  if (matrix.empty()) throw Failure("aut needs --matrix or --family-verify");
  auto g = numeric(fix_params(resolve_algebra(o, id), assignment(o)), id);
  auto M = matrix_arg(o, matrix, g.dims());
  rep.records.push_back(morphism_record(id, "automorphism", verify_automorphism(g, M)));
  if (auto* rec = catalog(o).automorphisms_of(id)) {
    auto member = aut_membership(rec->family, M);
    std::string detail;
    if (member)
      for (auto& [n, v] : *member) detail += (detail.empty() ? "" : ", ") + n + "=" + v.str();
    rep.records.push_back({id, "family membership", 0, member ? "pass" : "note",
                           member ? detail : "not of the listed family form"});
  }
  return emit(o, rep);
}

int cmd_iso(const Options& o, const std::string& src_id, const std::string& dst_id, const std::string& matrix,
            bool search) {
  auto a = assignment(o);
  auto src = numeric(fix_params(resolve_algebra(o, src_id), a), src_id);
  auto dst = numeric(fix_params(resolve_algebra(o, dst_id), a), dst_id);
  Report rep;
  std::string who = src_id + " -> " + dst_id;
  if (search) {
    auto C = search_isomorphism(src, dst);
    if (!C) {
      rep.records.push_back({who, "search", 0, "fail", "no block-diagonal witness within the search bound"});
      return emit(o, rep);
    }
    rep.records.push_back(morphism_record(who, "isomorphism", verify_isomorphism(src, dst, *C)));
    rep.records.back().detail = "found " + matrix_str(*C);
    return emit(o, rep);
  }
  if (matrix.empty()) throw Failure("iso needs --matrix or --search");
  rep.records.push_back(morphism_record(who, "isomorphism", verify_isomorphism(src, dst, matrix_arg(o, matrix, src.dims()))));
  return emit(o, rep);
}

int cmd_equiv(const Options& o, const std::string& id, const std::string& d1s, const std::string& d2s,
              const std::string& b1s, const std::string& b2s, bool as_dual_role) {
  auto gs = fix_params(resolve_algebra(o, id), assignment(o));
  auto g = numeric(gs, id);
  auto d1 = as_numeric(resolve_dual(o, gs, d1s, as_dual_role));
  auto d2 = as_numeric(resolve_dual(o, gs, d2s, as_dual_role));
  if (!d1 || !d2) throw Failure("the duals have free parameters; fix them with --at NAME=VALUE");
  auto* rec = catalog(o).automorphisms_of(id);
  if (!rec) throw UnknownId("no automorphism family for '" + id + "'");
  auto res = bialgebra_equivalent(g, *d1, *d2, matrix_arg(o, b1s, g.dims()), matrix_arg(o, b2s, g.dims()), rec->family);
  Report rep;
  rep.records.push_back({id, "equivalent", 0, res.equivalent ? "pass" : "fail",
                         (res.equivalent ? "candidate " : "no automorphism matches ") + matrix_str(res.candidate)});
  return emit(o, rep);
}

int cmd_catalog_verify(const Options& o, std::optional<int> table, const std::string& samples, bool swapped) {
  SamplingConfig cfg = samples.empty() ? SamplingConfig{} : parse_sampling_file(slurp(samples), samples);
  cfg.table = table;
  auto rep = verify_catalog(catalog(o), cfg);
  if (swapped) {
    Report s;
    size_t total = 0, passed = 0;
    for (auto& e : catalog(o).entries) {
      if (table && e.table != *table) continue;
      auto r = verify_swapped(e, cfg);
      ++total;
      passed += r.ok();
      s.append(r);
    }
    s.summary.push_back(std::to_string(passed) + "/" + std::to_string(total) + " swapped pairs pass");
    rep.append(s);
  }
  return emit(o, rep);
}

int cmd_catalog_solutions(const Options& o, const std::vector<std::string>& ids) {
  Report rep;
  std::vector<std::string> all = ids;
  if (all.empty())
    for (auto& s : catalog(o).solutions) all.push_back(s.id);
  for (auto& id : all) rep.append(verify_solutions(catalog(o), id));
  return emit(o, rep);
}

int cmd_catalog_show(const Options& o, const std::string& id) {
  auto e = load_entry(catalog(o), id);
  std::cout << "id: " << e.id << "\n";
  if (e.table) std::cout << "table: " << e.table << "\n";
  std::cout << print_algebra(e.primal);
  for (auto& p : e.params) std::cout << print_param_decl(p) << "\n";
  if (e.dual) {
    auto g = dual_algebra(*e.dual);
    g.labels = e.primal.labels;
    std::cout << "dual " << e.dual_label << ":";
    for (auto& s : bracket_statements(g)) std::cout << " " << s;
    std::cout << "\n";
  }
  if (!e.provenance.empty()) std::cout << "provenance: " << e.provenance << "\n";
  for (auto& n : e.notes) std::cout << "note: " << n << "\n";
  return 0;
}

int cmd_catalog_list(const Options& o) {
  for (auto& e : catalog(o).entries) std::cout << e.table << "  " << e.id << "\n";
  return 0;
}

int cmd_catalog_print(const Options& o) {
  std::cout << print_algebra_file(catalog(o).algebras) << "\n" << print_manifest(catalog(o));
  return 0;
}

int cmd_sdet(const Options& o, const std::string& matrix, const std::string& dims_text) {
  int m = 1, n = 1;
  if (dims_text.empty()) {
    // only the 2x2 grading is unambiguous
    if (parse_matrix_literal(matrix).size() != 2) throw Failure("give the grading with --dims m,n");
  } else {
    char comma = 0;
    std::istringstream ds(dims_text);
    if (!(ds >> m >> comma >> n) || comma != ',' || m < 0 || n < 0) throw Failure("--dims expects m,n");
  }
  auto M = matrix_arg(o, matrix, GradedDims(m, n));
  Report rep;
  auto b = sdet_schur_B(M), a = sdet_schur_A(M);
  std::string detail = std::string("B-complement ") + (b ? b->str() : "undefined") + ", A-complement " +
                       (a ? a->str() : "undefined");
  bool ok = a || b;
  rep.records.push_back({matrix, "sdet", 0, ok ? "pass" : "fail", detail});
  auto t = is_transformation_matrix(M);
  std::string tdetail;
  for (auto& d : t.diagnostics) tdetail += (tdetail.empty() ? "" : "; ") + d;
  rep.records.push_back({matrix, "transformation pattern", 0, t.ok ? "pass" : "note", tdetail});
  std::string head;
  if (ok) head = "sdet = " + superdeterminant(M).str() + "\n";
  return emit(o, rep, head);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie superalgebras and super-bialgebras in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--data", o.data_dir, "Catalog directory (default: $LSB_DATA_DIR or the built-in path)");
  app.add_option("--at", o.at, "Fix a parameter, NAME=VALUE (repeatable)");

  std::string target, id, src, dst, spec, matrix, d1, d2, b1, b2, samples, dims;
  bool as_dual_role = false, emit_def = false, family_verify = false, search = false, swapped = false;
  std::optional<int> table;
  std::vector<std::string> ids;

  auto* check = app.add_subcommand("check", "Structure rules and super Jacobi identity");
  check->add_option("target", target, "Definition file or catalog id")->required();

  auto* duals = app.add_subcommand("duals", "Solve for all compatible dual structures");
  duals->add_option("id", id)->required();

  auto* pair = app.add_subcommand("pair", "Check a bialgebra pair");
  pair->add_option("id", id)->required();
  pair->add_option("--dual", spec, "Dual statements, a file, or with --as-dual an algebra")->required();
  pair->add_flag("--as-dual", as_dual_role, "Read --dual as an algebra whose constants form the dual");

  auto* dbl = app.add_subcommand("double", "Drinfel'd double of a pair");
  dbl->add_option("id", id)->required();
  dbl->add_option("--dual", spec)->required();
  dbl->add_flag("--as-dual", as_dual_role);
  dbl->add_flag("--emit", emit_def, "Print the double in definition-file form");

  auto* aut = app.add_subcommand("aut", "Automorphism checks");
  aut->add_option("id", id)->required();
  aut->add_option("--matrix", matrix);
  aut->add_flag("--family-verify", family_verify, "Check the catalog family at its samples");

  auto* iso = app.add_subcommand("iso", "Isomorphism checks");
  iso->add_option("src", src)->required();
  iso->add_option("dst", dst)->required();
  iso->add_option("--matrix", matrix);
  iso->add_flag("--search", search, "Search small block-diagonal matrices");

  auto* equiv = app.add_subcommand("equiv", "Equivalence of two duals via their witnesses");
  equiv->add_option("id", id)->required();
  equiv->add_option("--d1", d1)->required();
  equiv->add_option("--d2", d2)->required();
  equiv->add_option("--b1", b1)->required();
  equiv->add_option("--b2", b2)->required();
  equiv->add_flag("--as-dual", as_dual_role);

  auto* cat = app.add_subcommand("catalog", "Catalog certification and lookup");
  cat->require_subcommand(1);
  auto* verify = cat->add_subcommand("verify", "Certify every entry");
  verify->add_option("--table", table)->check(CLI::IsMember({4, 5, 6}));
  verify->add_option("--samples", samples, "File of `NAME = {v, ...};` sample overrides");
  verify->add_flag("--swapped", swapped, "Also check each pair with the roles exchanged");
  auto* solutions = cat->add_subcommand("solutions", "Dual solution records and their isomorphism witnesses");
  solutions->add_option("ids", ids, "Record ids or algebra names (default: all)");
  auto* show = cat->add_subcommand("show", "Print one entry");
  show->add_option("id", id)->required();
  auto* list = cat->add_subcommand("list", "List entry ids");
  auto* print = cat->add_subcommand("print", "Print the catalog in canonical form");

  auto* sdet = app.add_subcommand("sdet", "Superdeterminant of a matrix");
  sdet->add_option("matrix", matrix)->required();
  sdet->add_option("--dims", dims, "Grading m,n (bosons, fermions); may be omitted for 2x2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o, target);
    if (*duals) return cmd_duals(o, id);
    if (*pair) return cmd_pair(o, id, spec, as_dual_role);
    if (*dbl) return cmd_double(o, id, spec, as_dual_role, emit_def);
    if (*aut) return cmd_aut(o, id, matrix, family_verify);
    if (*iso) return cmd_iso(o, src, dst, matrix, search);
    if (*equiv) return cmd_equiv(o, id, d1, d2, b1, b2, as_dual_role);
    if (*verify) return cmd_catalog_verify(o, table, samples, swapped);
    if (*solutions) return cmd_catalog_solutions(o, ids);
    if (*show) return cmd_catalog_show(o, id);
    if (*list) return cmd_catalog_list(o);
    if (*print) return cmd_catalog_print(o);
    if (*sdet) return cmd_sdet(o, matrix, dims);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
