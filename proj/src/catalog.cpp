#include "lsb/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#ifndef LSB_DATA_DIR
#define LSB_DATA_DIR "data"
#endif

namespace lsb {

namespace {

using K = ParseError::Kind;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int expect_int(TokenStream& ts, const char* context) {
  if (ts.peek().kind != Tok::Number || ts.peek().text.find_first_not_of("0123456789") != std::string::npos)
    ts.syntax_error(std::string("expected an integer ") + context);
  return std::stoi(ts.next().text);
}

void end_statement(TokenStream& ts) { ts.expect_punct(";", "to end the statement"); }

// Names declared by `param` or `let` anywhere in the block that starts at the
// stream position (just after its opening brace), so uses may precede them.
std::set<std::string> names_ahead(const TokenStream& ts) {
  std::set<std::string> out;
  int depth = 0;
  for (int k = 0;; ++k) {
    const Token& t = ts.peek(k);
    if (t.kind == Tok::End) break;
    if (t.kind == Tok::Punct) {
      if (t.text == "{" || t.text == "[" || t.text == "(") ++depth;
      if (t.text == "}" || t.text == "]" || t.text == ")") {
        if (depth == 0) break;
        --depth;
      }
    }
    if (depth <= 1 && t.kind == Tok::Ident && (t.text == "param" || t.text == "let") && ts.peek(k + 1).kind == Tok::Ident)
      out.insert(ts.peek(k + 1).text);
  }
  return out;
}

BracketScope scope_for(const SymbolicAlgebra& g, const std::set<std::string>& extra) {
  BracketScope s{g.dims(), {}, extra};
  for (int i = 0; i < g.size(); ++i) s.labels.push_back(g.label(i));
  for (auto& p : g.params) s.params.insert(p.name);
  return s;
}

// `{ statements }` with the brace already peeked; returns the statement text too.
std::pair<Tensor3<MultiPoly>, std::string> bracket_block(TokenStream& ts, const BracketScope& scope) {
  Token open = ts.expect_punct("{", "to open the statements");
  auto t = parse_bracket_block(ts, scope, "}");
  Token close = ts.peek();
  ts.expect_punct("}", "to close the statements");
  return {t, ts.slice(open.end, close.pos.offset)};
}

std::vector<ExprPtr> expr_list(TokenStream& ts) {
  std::vector<ExprPtr> out;
  do out.push_back(parse_expression(ts));
  while (ts.accept_punct(","));
  return out;
}

std::vector<std::pair<std::string, ExprPtr>> binding_list(TokenStream& ts) {
  std::vector<std::pair<std::string, ExprPtr>> out;
  do {
    std::string name = ts.expect_ident("as the bound name").text;
    ts.expect_punct("=", "after the bound name");
    out.emplace_back(name, parse_expression(ts));
  } while (ts.accept_punct(","));
  return out;
}

MultiPoly poly_or_fail(TokenStream& ts, const Expr& e) {
  try {
    return to_poly(e);
  } catch (const ExprError& err) {
    ts.fail(K::Semantic, err.pos, err.what());
  }
}

void add_param(TokenStream& ts, std::vector<ParamDecl>& into, const SourcePos& pos) {
  auto p = parse_param_decl(ts);
  if (find_param(into, p.name)) ts.fail(K::Semantic, pos, "parameter '" + p.name + "' declared twice");
  into.push_back(std::move(p));
}

void require_known(TokenStream& ts, const SourcePos& pos, const std::set<std::string>& used,
                   const std::set<std::string>& known, const std::string& where) {
  for (auto& u : used)
    if (!known.count(u)) ts.fail(K::Semantic, pos, "undeclared name '" + u + "' in " + where);
}

std::set<std::string> poly_vars(const Tensor3<MultiPoly>& t) {
  std::set<std::string> out;
  const int N = t.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) out.merge(t(i, j, k).variables());
  return out;
}

class ManifestReader {
 public:
  ManifestReader(TokenStream& ts, Catalog& cat) : ts_(ts), cat_(cat) {}

  void run() {
    while (!ts_.at_end()) {
      SourcePos pos = ts_.peek().pos;
      if (ts_.accept_ident("alias"))
        alias(pos);
      else if (ts_.accept_ident("primal"))
        primal(pos);
      else if (ts_.accept_ident("entry"))
        entry(pos);
      else if (ts_.accept_ident("automorphisms"))
        automorphisms(pos);
      else if (ts_.accept_ident("solution"))
        solution(pos);
      else
        ts_.syntax_error("expected alias, primal, entry, automorphisms or solution, found '" + ts_.peek().text + "'");
    }
  }

 private:
  const SymbolicAlgebra& algebra_named(const SourcePos& pos, const std::string& name) {
    auto* g = cat_.find_algebra(name);
    if (!g) ts_.fail(K::Semantic, pos, "unknown algebra '" + name + "'");
    return *g;
  }

  void alias(const SourcePos& pos) {
    std::string a = ts_.expect_string("as the alias");
    ts_.expect_punct("=", "after the alias");
    std::string name = ts_.expect_ident("as the aliased algebra").text;
    end_statement(ts_);
    if (!cat_.algebras.find(name)) ts_.fail(K::Semantic, pos, "alias of unknown algebra '" + name + "'");
    if (cat_.find_algebra(a)) ts_.fail(K::Semantic, pos, "alias '" + a + "' already names an algebra");
    cat_.aliases.emplace_back(a, name);
  }

  void primal(const SourcePos& pos) {
    PrimalInfo info;
    info.name = ts_.expect_ident("as the algebra name").text;
    algebra_named(pos, info.name);
    ts_.expect_punct("{", "to open the primal record");
    while (!ts_.accept_punct("}")) {
      if (ts_.accept_ident("table"))
        info.table = expect_int(ts_, "after table");
      else if (ts_.accept_ident("label"))
        info.label = ts_.expect_string("as the label");
      else if (ts_.accept_ident("provenance"))
        info.provenance = ts_.expect_string("as the provenance");
      else
        ts_.syntax_error("unexpected '" + ts_.peek().text + "' in a primal record");
      end_statement(ts_);
    }
    if (cat_.primal_info(info.name)) ts_.fail(K::Semantic, pos, "primal record for '" + info.name + "' given twice");
    cat_.primals.push_back(info);
  }

  void entry(const SourcePos& pos) {
    CatalogEntry e;
    e.id = ts_.expect_string("as the entry id");
    for (auto& other : cat_.entries)
      if (other.id == e.id) ts_.fail(K::Semantic, pos, "entry '" + e.id + "' defined twice");
    ts_.expect_punct("{", "to open the entry");
    auto ahead = names_ahead(ts_);
    bool have_primal = false;
    while (!ts_.accept_punct("}")) {
      if (ts_.at_end()) ts_.syntax_error("unterminated entry '" + e.id + "'");
      SourcePos at = ts_.peek().pos;
      if (ts_.accept_ident("table")) {
        e.table = expect_int(ts_, "after table");
        end_statement(ts_);
      } else if (ts_.accept_ident("primal")) {
        e.primal_name = ts_.expect_ident("as the primal algebra").text;
        e.primal = algebra_named(at, e.primal_name);
        have_primal = true;
        end_statement(ts_);
      } else if (ts_.accept_ident("dual")) {
        if (!have_primal) ts_.fail(K::Semantic, at, "dual given before primal");
        e.dual_label = ts_.expect_string("as the dual label");
        auto [t, text] = bracket_block(ts_, scope_for(e.primal, ahead));
        e.dual = SymbolicDual(e.dual_label, e.primal.dims(), t);
      } else if (ts_.accept_ident("param")) {
        add_param(ts_, e.params, at);
      } else if (ts_.accept_ident("provenance")) {
        e.provenance = ts_.expect_string("as the provenance");
        end_statement(ts_);
      } else if (ts_.accept_ident("note")) {
        e.notes.push_back(ts_.expect_string("as the note"));
        end_statement(ts_);
      } else {
        ts_.syntax_error("unexpected '" + ts_.peek().text + "' in an entry");
      }
    }
    if (!have_primal || !e.dual) ts_.fail(K::Semantic, pos, "entry '" + e.id + "' needs a primal and a dual");
    std::set<std::string> known;
    for (auto& p : e.effective_params()) known.insert(p.name);
    require_known(ts_, pos, poly_vars(e.dual->tensor()), known, "entry '" + e.id + "'");
    e.dual->params = e.effective_params();
    cat_.entries.push_back(std::move(e));
  }

  void automorphisms(const SourcePos& pos) {
    AutRecord r;
    std::string name = ts_.expect_ident("as the algebra name").text;
    const auto& g = algebra_named(pos, name);
    ts_.expect_punct("{", "to open the automorphism record");
    bool have_matrix = false;
    while (!ts_.accept_punct("}")) {
      if (ts_.at_end()) ts_.syntax_error("unterminated automorphism record");
      SourcePos at = ts_.peek().pos;
      if (ts_.accept_ident("matrix")) {
        r.matrix = parse_matrix_literal(ts_);
        have_matrix = true;
        end_statement(ts_);
      } else if (ts_.accept_ident("param")) {
        add_param(ts_, r.params, at);
      } else if (ts_.accept_ident("nonzero")) {
        auto more = expr_list(ts_);
        r.nonzero.insert(r.nonzero.end(), more.begin(), more.end());
        end_statement(ts_);
      } else {
        ts_.syntax_error("unexpected '" + ts_.peek().text + "' in an automorphism record");
      }
    }
    if (!have_matrix) ts_.fail(K::Semantic, pos, "automorphism record without a matrix");
    if (r.matrix.size() != g.size()) ts_.fail(K::Semantic, r.matrix.pos, "matrix size does not match " + name);
    std::set<std::string> known;
    for (auto& p : r.params) known.insert(p.name);
    require_known(ts_, r.matrix.pos, r.matrix.variables(), known, "automorphisms of " + name);
    r.family.algebra = name;
    r.family.dims = g.dims();
    for (auto& p : r.params) {
      r.family.params.push_back(p.name);
      // admissibility is polynomial, so only "nonzero" restrictions can be carried
      if (p.domain == ParamDomain::nonzero())
        r.family.nonzero.push_back(MultiPoly::var(p.name));
      else if (!(p.domain == ParamDomain::reals()))
        ts_.fail(K::Semantic, pos, "automorphism parameter '" + p.name + "' must range over the reals, optionally without 0");
    }
    r.family.shape = MatP(r.matrix.size(), r.matrix.size());
    for (int a = 0; a < r.matrix.size(); ++a)
      for (int b = 0; b < r.matrix.size(); ++b) r.family.shape(a, b) = poly_or_fail(ts_, *r.matrix.rows[a][b]);
    for (auto& e : r.nonzero) {
      require_known(ts_, e->pos, variables(*e), known, "a nonzero condition");
      r.family.nonzero.push_back(poly_or_fail(ts_, *e));
    }
    if (cat_.automorphisms_of(name)) ts_.fail(K::Semantic, pos, "automorphisms of '" + name + "' given twice");
    cat_.automorphisms.push_back(std::move(r));
  }

  void solution(const SourcePos& pos) {
    SolutionRecord r;
    r.id = ts_.expect_string("as the solution id");
    for (auto& other : cat_.solutions)
      if (other.id == r.id) ts_.fail(K::Semantic, pos, "solution '" + r.id + "' defined twice");
    ts_.expect_punct("{", "to open the solution record");
    auto ahead = names_ahead(ts_);
    const SymbolicAlgebra* first = nullptr;
    bool have_family = false;
    while (!ts_.accept_punct("}")) {
      if (ts_.at_end()) ts_.syntax_error("unterminated solution '" + r.id + "'");
      SourcePos at = ts_.peek().pos;
      if (ts_.accept_ident("algebra")) {
        do {
          SourcePos npos = ts_.peek().pos;
          std::string name = ts_.expect_ident("as an algebra name").text;
          const auto& g = algebra_named(npos, name);
          if (first && !(g.dims() == first->dims())) ts_.fail(K::Semantic, npos, "algebras of one record must share dims");
          if (!first) first = &g;
          r.algebras.push_back(name);
        } while (ts_.accept_punct(","));
        end_statement(ts_);
      } else if (ts_.accept_ident("at")) {
        r.at = binding_list(ts_);
        end_statement(ts_);
      } else if (ts_.accept_ident("family")) {
        if (!first) ts_.fail(K::Semantic, at, "family given before the algebra list");
        auto [t, text] = bracket_block(ts_, scope_for(*first, ahead));
        r.family = SymbolicDual(r.id, first->dims(), t);
        r.family_text = text;
        have_family = true;
      } else if (ts_.accept_ident("param")) {
        add_param(ts_, r.params, at);
      } else if (ts_.accept_ident("status")) {
        r.status = ts_.expect_string("as the status");
        end_statement(ts_);
      } else if (ts_.accept_ident("provenance")) {
        r.provenance = ts_.expect_string("as the provenance");
        end_statement(ts_);
      } else if (ts_.accept_ident("note")) {
        r.notes.push_back(ts_.expect_string("as the note"));
        end_statement(ts_);
      } else if (ts_.accept_ident("witness")) {
        if (!first) ts_.fail(K::Semantic, at, "witness given before the algebra list");
        r.witnesses.push_back(witness(*first));
      } else {
        ts_.syntax_error("unexpected '" + ts_.peek().text + "' in a solution record");
      }
    }
    if (!first || !have_family) ts_.fail(K::Semantic, pos, "solution '" + r.id + "' needs algebras and a family");
    if (r.witnesses.empty() == r.status.empty())
      ts_.fail(K::Semantic, pos, "solution '" + r.id + "' needs either witnesses or a status, not both");
    std::set<std::string> known;
    for (auto& p : first->params) known.insert(p.name);
    for (auto& p : r.params) known.insert(p.name);
    for (auto& [n, e] : r.at) {
      if (!find_param(first->params, n)) ts_.fail(K::Semantic, e->pos, "'" + n + "' is not a parameter of " + first->name());
      if (!variables(*e).empty()) ts_.fail(K::Semantic, e->pos, "'at' values must be constants");
    }
    require_known(ts_, pos, poly_vars(r.family.tensor()), known, "the family of '" + r.id + "'");
    for (auto& w : r.witnesses) {
      std::set<std::string> wk = known;
      for (auto& p : w.params) wk.insert(p.name);
      for (auto& [n, e] : w.lets) {
        require_known(ts_, e->pos, variables(*e), wk, "witness '" + w.name + "'");
        wk.insert(n);
      }
      require_known(ts_, w.matrix.pos, w.matrix.variables(), wk, "witness '" + w.name + "'");
      for (auto& e : w.nonzero) require_known(ts_, e->pos, variables(*e), wk, "witness '" + w.name + "'");
      for (auto& [n, e] : w.target_with) require_known(ts_, e->pos, variables(*e), wk, "witness '" + w.name + "'");
      if (w.matrix.size() != first->size()) ts_.fail(K::Semantic, w.matrix.pos, "witness matrix size does not match");
    }
    cat_.solutions.push_back(std::move(r));
  }

  Witness witness(const SymbolicAlgebra& g) {
    Witness w;
    SourcePos pos = ts_.peek().pos;
    w.name = ts_.expect_string("as the witness name");
    ts_.expect_punct("{", "to open the witness");
    bool have_matrix = false;
    while (!ts_.accept_punct("}")) {
      if (ts_.at_end()) ts_.syntax_error("unterminated witness '" + w.name + "'");
      SourcePos at = ts_.peek().pos;
      if (ts_.accept_ident("target")) {
        w.target = ts_.expect_ident("as the target algebra").text;
        const auto& t = algebra_named(at, w.target);
        if (!(t.dims() == g.dims())) ts_.fail(K::Semantic, at, "target dims differ from the family's");
        if (ts_.accept_ident("with")) w.target_with = binding_list(ts_);
        for (auto& p : t.params) {
          bool bound = false;
          for (auto& [n, e] : w.target_with) bound = bound || n == p.name;
          if (!bound) ts_.fail(K::Semantic, at, "target parameter '" + p.name + "' must be bound with `with`");
        }
        end_statement(ts_);
      } else if (ts_.accept_ident("matrix")) {
        w.matrix = parse_matrix_literal(ts_);
        have_matrix = true;
        end_statement(ts_);
      } else if (ts_.accept_ident("param")) {
        add_param(ts_, w.params, at);
      } else if (ts_.accept_ident("let")) {
        auto b = binding_list(ts_);
        w.lets.insert(w.lets.end(), b.begin(), b.end());
        end_statement(ts_);
      } else if (ts_.accept_ident("nonzero")) {
        auto more = expr_list(ts_);
        w.nonzero.insert(w.nonzero.end(), more.begin(), more.end());
        end_statement(ts_);
      } else if (ts_.accept_ident("forced")) {
        do {
          ts_.expect_punct("(", "to open a matrix position");
          int r = expect_int(ts_, "as the row");
          ts_.expect_punct(",", "between row and column");
          int c = expect_int(ts_, "as the column");
          ts_.expect_punct(")", "to close a matrix position");
          if (r < 1 || c < 1 || r > g.size() || c > g.size()) ts_.fail(K::Semantic, at, "forced position out of range");
          w.forced.emplace_back(r, c);
        } while (ts_.accept_punct(","));
        end_statement(ts_);
      } else if (ts_.accept_ident("note")) {
        w.notes.push_back(ts_.expect_string("as the note"));
        end_statement(ts_);
      } else {
        ts_.syntax_error("unexpected '" + ts_.peek().text + "' in a witness");
      }
    }
    if (w.target.empty() || !have_matrix) ts_.fail(K::Semantic, pos, "witness '" + w.name + "' needs a target and a matrix");
    return w;
  }

  TokenStream& ts_;
  Catalog& cat_;
};

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string matrix_text(const MatrixLiteral& m) {
  std::string s = "[";
  for (size_t r = 0; r < m.rows.size(); ++r) {
    if (r) s += "; ";
    for (size_t c = 0; c < m.rows[r].size(); ++c) s += (c ? ", " : "") + expr_str(*m.rows[r][c]);
  }
  return s + "]";
}

std::string exprs_text(const std::vector<ExprPtr>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + expr_str(*v[i]);
  return s;
}

std::string bindings_text(const std::vector<std::pair<std::string, ExprPtr>>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].first + " = " + expr_str(*v[i].second);
  return s;
}

std::string statements_text(const SymbolicDual& d, const SymbolicAlgebra& primal) {
  auto g = dual_algebra(d);
  g.labels.clear();
  for (int i = 0; i < primal.size(); ++i) g.labels.push_back(primal.label(i));
  std::string s;
  for (auto& st : bracket_statements(g)) s += " " + st;
  return s;
}

// ---- verification ----

const char* const kChecks[] = {"primal_sj", "dual_sj", "mixed", "double_sj", "ad_invariance"};

struct CheckValue {
  size_t count = 0;
  std::string where;
};

template <class S>
std::string first_index(const Residual<S>& r) {
  if (r.zero()) return "";
  auto& ix = r.nonzero.front().index;
  return "(" + std::to_string(ix[0] + 1) + "," + std::to_string(ix[1] + 1) + "," + std::to_string(ix[2] + 1) + "," +
         std::to_string(ix[3] + 1) + ")";
}

template <class S>
std::vector<CheckValue> run_checks(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  std::vector<CheckValue> out;
  auto add = [&](const Residual<S>& r) { out.push_back({r.count(), first_index(r)}); };
  add(super_jacobi_residual(g));
  add(dual_jacobi_residual(d));
  add(mixed_jacobi_residual(g, d));
  auto D = build_double(g, d);
  add(super_jacobi_residual(D.algebra));
  add(pairing_ad_invariance(D));
  return out;
}

std::vector<std::vector<mpq_class>> sample_sets(const std::vector<ParamDecl>& decls, const SamplingConfig& cfg) {
  std::vector<std::vector<mpq_class>> out;
  for (auto& d : decls) {
    auto it = cfg.overrides.find(d.name);
    out.push_back(it != cfg.overrides.end() ? it->second : d.effective_samples());
  }
  return out;
}

std::vector<Assignment> grid_of(const std::vector<std::string>& names, const std::vector<std::vector<mpq_class>>& sets) {
  std::vector<Assignment> grid{Assignment{}};
  for (size_t i = 0; i < names.size(); ++i) {
    std::vector<Assignment> next;
    for (auto& a : grid)
      for (auto& v : sets[i]) {
        Assignment b = a;
        b[names[i]] = GScalar(v);
        next.push_back(std::move(b));
      }
    grid = std::move(next);
  }
  return grid;
}

std::string assignment_str(const Assignment& a) {
  std::string s;
  for (auto& [n, v] : a) s += (s.empty() ? "" : ", ") + n + "=" + v.str();
  return s;
}

Report verify_pair(const std::string& id, const SymbolicAlgebra& g, const SymbolicDual& d,
                   const std::vector<ParamDecl>& decls, const SamplingConfig& cfg) {
  std::vector<CheckValue> sym;
  bool symbolic = cfg.symbolic;
  if (symbolic) sym = run_checks(g, d);

  std::vector<std::string> names;
  for (auto& p : decls) names.push_back(p.name);
  auto sets = sample_sets(decls, cfg);
  for (size_t i = 0; i < decls.size(); ++i)
    for (auto& v : sets[i])
      if (!decls[i].domain.contains(v))
        throw std::invalid_argument("sample " + v.get_str() + " of '" + decls[i].name + "' is outside " +
                                    decls[i].domain.str());
  auto grid = grid_of(names, sets);

  std::vector<size_t> worst(5, 0);
  std::vector<std::string> where(5);
  for (auto& a : grid) {
    auto vals = run_checks(specialize(g, a), specialize(d, a));
    for (int c = 0; c < 5; ++c)
      if (vals[c].count > worst[c]) {
        if (where[c].empty()) where[c] = (a.empty() ? "" : "at " + assignment_str(a) + ": ") + vals[c].where;
        worst[c] = vals[c].count;
      }
  }

  Report rep;
  for (int c = 0; c < 5; ++c) {
    CheckRecord r{id, kChecks[c], 0, "pass", ""};
    bool sym_zero = symbolic && sym[c].count == 0;
    std::string samples = std::to_string(grid.size()) + (grid.size() == 1 ? " sample" : " samples");
    if (worst[c] > 0) {
      r.status = "fail";
      r.residual_nonzero_count = worst[c];
      r.detail = where[c];
    } else if (sym_zero) {
      r.detail = names.empty() ? "exact" : "symbolic; " + samples;
    } else if (!grid.empty()) {
      r.detail = samples;
    } else {
      r.status = "unsampled";
      r.residual_nonzero_count = symbolic ? sym[c].count : 0;
      r.detail = "no samples and no symbolic zero";
    }
    rep.records.push_back(r);
  }
  return rep;
}

bool entry_passed(const Report& r, const std::string& id) {
  for (auto& c : r.records)
    if (c.entry == id && c.status != "pass") return false;
  return true;
}

// ---- solution records ----

Assignment constants_of(const std::vector<std::pair<std::string, ExprPtr>>& at) {
  Assignment a;
  for (auto& [n, e] : at) a[n] = eval(*e, {});
  return a;
}

SymbolicDual family_over(const SolutionRecord& r, const SymbolicAlgebra& g) {
  std::set<std::string> extra;
  for (auto& p : r.params) extra.insert(p.name);
  TokenStream ts(r.family_text, "<family " + r.id + ">");
  SymbolicDual d(r.id, g.dims(), parse_bracket_block(ts, scope_for(g, extra), nullptr));
  return d;
}

template <class F>
Tensor3<MultiPoly> map_tensor(const Tensor3<MultiPoly>& t, F&& fn) {
  return t.map([&](const MultiPoly& p) { return fn(p); });
}

const ParamDecl* sample_source(const Witness& w, const SolutionRecord& r, const SymbolicAlgebra& g,
                               const std::string& name) {
  if (auto* p = find_param(w.params, name)) return p;
  if (auto* p = find_param(r.params, name)) return p;
  return find_param(g.params, name);
}

Report check_witness(const Catalog& cat, const SolutionRecord& r, const Witness& w) {
  Report rep;
  const std::string who = r.id + " / " + w.name;
  const auto& g = cat.algebra(r.algebras.front());
  Assignment fixed = constants_of(r.at);

  std::set<std::string> used = poly_vars(r.family.tensor());
  used.merge(w.matrix.variables());
  for (auto& e : w.nonzero) used.merge(variables(*e));
  for (auto& [n, e] : w.target_with) used.merge(variables(*e));
  for (auto& [n, e] : w.lets) used.merge(variables(*e));
  std::set<std::string> bound;
  for (auto& [n, e] : w.lets) bound.insert(n);
  std::vector<std::string> names;
  std::vector<std::vector<mpq_class>> sets;
  for (auto& u : used) {
    if (bound.count(u) || fixed.count(u)) continue;
    auto* src = sample_source(w, r, g, u);
    if (!src) throw std::logic_error("witness " + who + ": no samples for '" + u + "'");
    names.push_back(u);
    sets.push_back(src->effective_samples());
  }

  const auto& target = cat.algebra(w.target);
  size_t tested = 0, failed = 0;
  std::string first_failure;
  std::optional<Assignment> first_point;
  std::optional<SuperMatrix> first_matrix;
  for (auto a : grid_of(names, sets)) {
    a.insert(fixed.begin(), fixed.end());
    SuperMatrix C;
    LieSuperAlgebra src, dst;
    try {
      for (auto& [n, e] : w.lets) a[n] = eval(*e, a);
      bool admissible = true;
      for (auto& e : w.nonzero) admissible = admissible && !eval(*e, a).is_zero();
      if (!admissible) continue;
      C = evaluate_matrix(w.matrix, g.dims(), a);
      Assignment ta;
      for (auto& [n, e] : w.target_with) ta[n] = eval(*e, a);
      dst = specialize(target, ta);
      src = dual_algebra(specialize(r.family, a));
    } catch (const ExprError&) {
      continue;  // a denominator vanishes: outside the stated conditions
    }
    ++tested;
    if (!first_point) {
      first_point = a;
      first_matrix = C;
    }
    std::string why;
    auto tm = is_transformation_matrix(C);
    if (!tm) {
      why = "not a transformation matrix";
    } else {
      auto iso = verify_isomorphism(src, dst, C);
      if (!iso) why = std::to_string(iso.residual.count()) + " residual components";
    }
    if (!why.empty()) {
      ++failed;
      if (first_failure.empty()) first_failure = "at " + assignment_str(a) + ": " + why;
    }
  }
  CheckRecord rec{who, "isomorphism", failed, "pass", ""};
  if (failed) {
    rec.status = "fail";
    rec.detail = first_failure;
  } else if (tested < 3) {
    rec.status = "fail";
    rec.detail = "only " + std::to_string(tested) + " admissible sample points";
  } else {
    rec.detail = std::to_string(tested) + " points onto " + w.target;
  }
  rep.records.push_back(rec);

  for (auto [row, col] : w.forced) {
    std::string pos = "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    CheckRecord f{who, "forced " + pos, 0, "pass", ""};
    if (!first_matrix) {
      f.status = "fail";
      f.detail = "no admissible point";
      rep.records.push_back(f);
      continue;
    }
    if (!(*first_matrix)(row - 1, col - 1).is_zero()) {
      f.status = "fail";
      f.detail = "entry is not zero as stated";
      rep.records.push_back(f);
      continue;
    }
    auto trial = [&](const GScalar& v) {
      SuperMatrix M = *first_matrix;
      M(row - 1, col - 1) = v;
      return static_cast<bool>(is_transformation_matrix(M));
    };
    // Entries are stated as real numbers, so the claim is that a real nonzero value is rejected.
    bool real_ok = trial(GScalar(1)), imag_ok = trial(GScalar::i());
    std::string imag = imag_ok ? "imaginary value admitted" : "imaginary value rejected";
    if (!real_ok) {
      f.detail = "real value rejected, " + imag;
    } else {
      SuperMatrix M = *first_matrix;
      M(row - 1, col - 1) = GScalar(1);
      Assignment ta;
      for (auto& [n, e] : w.target_with) ta[n] = eval(*e, *first_point);
      auto src = dual_algebra(specialize(r.family, *first_point));
      bool still = static_cast<bool>(verify_isomorphism(src, specialize(target, ta), M));
      f.status = "note";
      f.detail = "real value admitted" + std::string(still ? " and still an isomorphism" : ", no longer an isomorphism") +
                 ", " + imag + "; the stated zero is not forced";
    }
    rep.records.push_back(f);
  }
  return rep;
}

}  // namespace

std::vector<ParamDecl> CatalogEntry::effective_params() const {
  std::vector<ParamDecl> out;
  for (auto& p : primal.params) {
    auto* o = find_param(params, p.name);
    out.push_back(o ? *o : p);
  }
  for (auto& p : params)
    if (!find_param(out, p.name)) out.push_back(p);
  return out;
}

Catalog Catalog::parse(const std::string& algebra_text, const std::string& manifest_text,
                       const std::string& algebra_source, const std::string& manifest_source) {
  Catalog cat;
  cat.algebras = parse_algebra_file(algebra_text, algebra_source);
  TokenStream ts(manifest_text, manifest_source);
  ManifestReader(ts, cat).run();
  return cat;
}

std::string Catalog::default_dir() {
  if (const char* env = std::getenv("LSB_DATA_DIR"); env && *env) return env;
  return LSB_DATA_DIR;
}

Catalog Catalog::load(const std::string& dir) {
  std::string a = dir + "/algebras.lsb", m = dir + "/manifest.lsb";
  return parse(read_file(a), read_file(m), a, m);
}

Catalog Catalog::load_default() { return load(default_dir()); }

const SymbolicAlgebra* Catalog::find_algebra(const std::string& id) const {
  if (auto* g = algebras.find(id)) return g;
  for (auto& [a, name] : aliases)
    if (a == id) return algebras.find(name);
  return nullptr;
}

const SymbolicAlgebra& Catalog::algebra(const std::string& id) const {
  auto* g = find_algebra(id);
  if (!g) throw UnknownId("unknown algebra '" + id + "'");
  return *g;
}

const PrimalInfo* Catalog::primal_info(const std::string& name) const {
  for (auto& p : primals)
    if (p.name == name) return &p;
  return nullptr;
}

const AutRecord* Catalog::automorphisms_of(const std::string& id) const {
  auto* g = find_algebra(id);
  std::string name = g ? g->name() : id;
  for (auto& r : automorphisms)
    if (r.family.algebra == name) return &r;
  return nullptr;
}

std::vector<const SolutionRecord*> Catalog::solutions_for(const std::string& id) const {
  for (auto& r : solutions)
    if (r.id == id) return {&r};
  std::vector<const SolutionRecord*> out;
  auto* g = find_algebra(id);
  if (!g) return out;
  for (auto& r : solutions)
    for (auto& a : r.algebras)
      if (a == g->name()) out.push_back(&r);
  return out;
}

CatalogEntry load_entry(const Catalog& cat, const std::string& id) {
  for (auto& e : cat.entries)
    if (e.id == id) return e;
  if (auto* g = cat.find_algebra(id)) {
    CatalogEntry e;
    e.kind = CatalogEntry::Kind::Algebra;
    e.id = g->name();
    e.primal_name = g->name();
    e.primal = *g;
    if (auto* info = cat.primal_info(g->name())) {
      e.table = info->table;
      e.provenance = info->provenance;
    }
    return e;
  }
  for (auto& e : cat.entries)
    if (e.dual_label == id) return e;
  throw UnknownId("unknown catalog id '" + id + "'");
}

std::string print_manifest(const Catalog& cat) {
  std::ostringstream o;
  for (auto& [a, name] : cat.aliases) o << "alias " << quoted(a) << " = " << name << ";\n";
  for (auto& p : cat.primals)
    o << "primal " << p.name << " { table " << p.table << "; label " << quoted(p.label) << "; provenance "
      << quoted(p.provenance) << "; }\n";
  for (auto& e : cat.entries) {
    o << "entry " << quoted(e.id) << " {\n  table " << e.table << ";\n  primal " << e.primal_name << ";\n";
    for (auto& p : e.params) o << "  " << print_param_decl(p) << "\n";
    o << "  dual " << quoted(e.dual_label) << " {" << statements_text(*e.dual, e.primal) << " }\n";
    o << "  provenance " << quoted(e.provenance) << ";\n";
    for (auto& n : e.notes) o << "  note " << quoted(n) << ";\n";
    o << "}\n";
  }
  for (auto& r : cat.automorphisms) {
    o << "automorphisms " << r.family.algebra << " {\n  matrix " << matrix_text(r.matrix) << ";\n";
    for (auto& p : r.params) o << "  " << print_param_decl(p) << "\n";
    if (!r.nonzero.empty()) o << "  nonzero " << exprs_text(r.nonzero) << ";\n";
    o << "}\n";
  }
  for (auto& r : cat.solutions) {
    o << "solution " << quoted(r.id) << " {\n  algebra ";
    for (size_t i = 0; i < r.algebras.size(); ++i) o << (i ? ", " : "") << r.algebras[i];
    o << ";\n";
    if (!r.at.empty()) o << "  at " << bindings_text(r.at) << ";\n";
    for (auto& p : r.params) o << "  " << print_param_decl(p) << "\n";
    o << "  family {" << statements_text(r.family, *cat.find_algebra(r.algebras.front())) << " }\n";
    if (!r.status.empty()) o << "  status " << quoted(r.status) << ";\n";
    o << "  provenance " << quoted(r.provenance) << ";\n";
    for (auto& n : r.notes) o << "  note " << quoted(n) << ";\n";
    for (auto& w : r.witnesses) {
      o << "  witness " << quoted(w.name) << " {\n    target " << w.target;
      if (!w.target_with.empty()) o << " with " << bindings_text(w.target_with);
      o << ";\n";
      for (auto& p : w.params) o << "    " << print_param_decl(p) << "\n";
      for (auto& [n, e] : w.lets) o << "    let " << n << " = " << expr_str(*e) << ";\n";
      o << "    matrix " << matrix_text(w.matrix) << ";\n";
      if (!w.nonzero.empty()) o << "    nonzero " << exprs_text(w.nonzero) << ";\n";
      if (!w.forced.empty()) {
        o << "    forced ";
        for (size_t i = 0; i < w.forced.size(); ++i)
          o << (i ? ", " : "") << "(" << w.forced[i].first << "," << w.forced[i].second << ")";
        o << ";\n";
      }
      for (auto& n : w.notes) o << "    note " << quoted(n) << ";\n";
      o << "  }\n";
    }
    o << "}\n";
  }
  return o.str();
}

bool Report::ok() const {
  for (auto& r : records)
    if (r.status == "fail" || r.status == "unsampled") return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream o;
  for (auto& r : records) {
    o << (r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : r.status == "note" ? "NOTE" : "UNSAMPLED") << "  "
      << r.entry << "  " << r.check;
    if (r.residual_nonzero_count) o << "  nonzero=" << r.residual_nonzero_count;
    if (!r.detail.empty()) o << "  [" << r.detail << "]";
    o << "\n";
  }
  for (auto& s : summary) o << s << "\n";
  return o.str();
}

std::string Report::as_records() const {
  std::string out;
  for (auto& r : records) {
    nlohmann::ordered_json j;
    j["entry"] = r.entry;
    j["check"] = r.check;
    j["residual_nonzero_count"] = r.residual_nonzero_count;
    j["status"] = r.status;
    j["detail"] = r.detail;
    out += j.dump() + "\n";
  }
  for (auto& s : summary) {
    nlohmann::ordered_json j;
    j["summary"] = s;
    out += j.dump() + "\n";
  }
  return out;
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  summary.insert(summary.end(), other.summary.begin(), other.summary.end());
}

SamplingConfig parse_sampling_file(const std::string& text, const std::string& source) {
  SamplingConfig cfg;
  TokenStream ts(text, source);
  while (!ts.at_end()) {
    SourcePos pos = ts.peek().pos;
    std::string name = ts.expect_ident("as the parameter name").text;
    ts.expect_punct("=", "after the parameter name");
    ts.expect_punct("{", "to open the sample set");
    std::vector<mpq_class> values;
    if (!ts.is_punct("}")) {
      for (auto& e : expr_list(ts)) {
        GScalar v;
        try {
          v = eval(*e, {});
        } catch (const ExprError& err) {
          ts.fail(K::Semantic, err.pos, err.what());
        }
        if (!v.is_real()) ts.fail(K::Semantic, e->pos, "samples must be rational");
        values.push_back(v.re());
      }
    }
    ts.expect_punct("}", "to close the sample set");
    end_statement(ts);
    if (cfg.overrides.count(name)) ts.fail(K::Semantic, pos, "samples for '" + name + "' given twice");
    cfg.overrides[name] = values;
  }
  return cfg;
}

Report verify_entry(const CatalogEntry& e, const SamplingConfig& cfg) {
  auto decls = e.effective_params();
  auto primal = e.primal;
  primal.params = decls;
  SymbolicDual d = e.dual ? *e.dual : SymbolicDual("I", e.primal.dims());
  return verify_pair(e.id, primal, d, decls, cfg);
}

Report verify_bialgebra(const std::string& label, const SymbolicAlgebra& g, const SymbolicDual& d,
                        const SamplingConfig& cfg) {
  return verify_pair(label, g, d, g.params, cfg);
}

Report verify_algebra(const std::string& label, const SymbolicAlgebra& g, const SamplingConfig& cfg) {
  Report rep;
  auto v = validate_structure(g);
  CheckRecord s{label, "structure", v.violations.size(), v.ok() ? "pass" : "fail", v.ok() ? "" : v.str()};
  rep.records.push_back(s);
  auto sym = super_jacobi_residual(g);
  std::vector<std::string> names;
  for (auto& p : g.params) names.push_back(p.name);
  auto grid = grid_of(names, sample_sets(g.params, cfg));
  CheckRecord j{label, "primal_sj", 0, "pass", ""};
  for (auto& a : grid) {
    auto r = super_jacobi_residual(specialize(g, a));
    if (r.count() > j.residual_nonzero_count) {
      j.status = "fail";
      j.residual_nonzero_count = r.count();
      j.detail = (a.empty() ? "" : "at " + assignment_str(a) + ": ") + first_index(r);
    }
  }
  if (j.status == "pass") {
    if (sym.zero())
      j.detail = names.empty() ? "exact" : "symbolic; " + std::to_string(grid.size()) + " samples";
    else if (grid.empty())
      j = {label, "primal_sj", sym.count(), "unsampled", "no samples and no symbolic zero"};
    else
      j.detail = std::to_string(grid.size()) + " samples";
  }
  rep.records.push_back(j);
  return rep;
}

Report verify_swapped(const CatalogEntry& e, const SamplingConfig& cfg) {
  if (!e.dual) throw std::invalid_argument("entry '" + e.id + "' has no dual");
  auto decls = e.effective_params();
  auto g = dual_algebra(*e.dual);
  g.labels = e.primal.labels;
  g.params = decls;
  return verify_pair(e.id + " swapped", g, as_dual(e.primal), decls, cfg);
}

Report verify_catalog(const Catalog& cat, const SamplingConfig& cfg) {
  Report rep;
  size_t total = 0, passed = 0;
  for (auto& e : cat.entries) {
    if (cfg.table && e.table != *cfg.table) continue;
    auto r = verify_entry(e, cfg);
    ++total;
    if (entry_passed(r, e.id)) ++passed;
    rep.append(r);
  }
  rep.summary.push_back(std::to_string(passed) + "/" + std::to_string(total) + " pass");
  return rep;
}

Report verify_solutions(const Catalog& cat, const std::string& id) {
  auto records = cat.solutions_for(id);
  if (records.empty()) throw UnknownId("no solution record for '" + id + "'");
  Report rep;
  for (auto* r : records) {
    Assignment fixed = constants_of(r->at);
    for (auto& name : r->algebras) {
      const auto& g = cat.algebra(name);
      SymbolicAlgebra gs = g;
      if (!fixed.empty()) {
        gs = lift(specialize(g, fixed));
        gs.labels = g.labels;
      }
      SymbolicDual d = family_over(*r, g);
      if (!fixed.empty()) d = SymbolicDual(d.name(), d.dims(), map_tensor(d.tensor(), [&](const MultiPoly& p) {
                                             return p.substitute(fixed);
                                           }));
      auto fam = solve_duals(gs);
      auto ok = family_contains(fam, d);
      CheckRecord c{r->id, "contained in solve_duals(" + name + ")", 0, ok ? "pass" : "fail", ""};
      if (ok) c.detail = "nullity " + std::to_string(fam.nullity());
      rep.records.push_back(c);
    }
    if (!r->status.empty()) rep.records.push_back({r->id, "classification", 0, "note", r->status});
    for (auto& w : r->witnesses) rep.append(check_witness(cat, *r, w));
  }
  size_t fails = 0;
  for (auto& c : rep.records) fails += c.status == "fail";
  rep.summary.push_back(id + ": " + std::to_string(rep.records.size() - fails) + "/" +
                        std::to_string(rep.records.size()) + " checks pass");
  return rep;
}

}  // namespace lsb
