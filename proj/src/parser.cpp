#include "lsb/parser.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lsb {

namespace {

using K = ParseError::Kind;

mpq_class constant_value(TokenStream& ts, const char* what) {
  SourcePos pos = ts.peek().pos;
  auto e = parse_expression(ts);
  GScalar v;
  try {
    v = eval(*e, {});
  } catch (const ExprError& err) {
    ts.fail(K::Semantic, pos, std::string(what) + ": " + err.what());
  }
  if (!v.is_real()) ts.fail(K::Semantic, pos, std::string(what) + " must be real");
  return v.re();
}

std::vector<mpq_class> value_set(TokenStream& ts, const char* what) {
  ts.expect_punct("{", what);
  std::vector<mpq_class> out;
  if (!ts.is_punct("}")) {
    do out.push_back(constant_value(ts, what));
    while (ts.accept_punct(","));
  }
  ts.expect_punct("}", what);
  return out;
}

std::string value_list(const std::vector<mpq_class>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "}";
}

bool accept_inf(TokenStream& ts, bool negative) {
  if (negative) {
    if (ts.is_punct("-") && ts.is_ident("inf", 1)) {
      ts.next();
      ts.next();
      return true;
    }
    return false;
  }
  if (ts.is_punct("+") && ts.is_ident("inf", 1)) ts.next();
  return ts.accept_ident("inf");
}

struct Statement {
  int i, j;
  std::vector<std::pair<int, MultiPoly>> rhs;
  SourcePos pos;
  std::string text;
};

Statement parse_statement(TokenStream& ts, const BracketScope& scope) {
  Statement st;
  st.pos = ts.peek().pos;
  const size_t start = st.pos.offset;
  bool brace = ts.is_punct("{");
  if (!brace && !ts.is_punct("[")) ts.syntax_error("expected a bracket statement '[Xi,Xj] = ...' or '{Xi,Xj} = ...'");
  ts.next();
  Token a = ts.expect_ident("as first generator");
  ts.expect_punct(",", "between generators");
  Token b = ts.expect_ident("as second generator");
  ts.expect_punct(brace ? "}" : "]", "to close the bracket");
  ts.expect_punct("=", "after the bracket");
  auto rhs = parse_expression(ts);
  Token semi = ts.expect_punct(";", "to end the statement");
  st.text = ts.slice(start, semi.end);

  st.i = scope.index_of(a.text);
  st.j = scope.index_of(b.text);
  if (st.i < 0) ts.fail(K::Semantic, a.pos, "unknown generator '" + a.text + "'", st.text);
  if (st.j < 0) ts.fail(K::Semantic, b.pos, "unknown generator '" + b.text + "'", st.text);

  for (auto& v : variables(*rhs))
    if (scope.index_of(v) < 0 && !scope.params.count(v))
      ts.fail(K::Semantic, st.pos, "undeclared name '" + v + "'", st.text);

  MultiPoly poly;
  try {
    poly = to_poly(*rhs);
  } catch (const ExprError& err) {
    ts.fail(K::Semantic, err.pos, err.what(), st.text);
  }
  std::map<int, MultiPoly> coeff;
  for (auto& [mono, c] : poly.terms()) {
    int gen = -1;
    Monomial rest;
    for (auto& [v, e] : mono) {
      int k = scope.index_of(v);
      if (k < 0) {
        rest.push_back({v, e});
        continue;
      }
      if (gen >= 0 || e != 1) ts.fail(K::Semantic, st.pos, "right-hand side must be linear in the generators", st.text);
      gen = k;
    }
    if (gen < 0) ts.fail(K::Semantic, st.pos, "right-hand side term without a generator", st.text);
    coeff[gen] += MultiPoly::term(c, rest);
  }

  const GradedDims& d = scope.dims;
  const int pij = (d.parity(st.i) + d.parity(st.j)) & 1;
  for (auto& [k, c] : coeff) {
    if (c.is_zero()) continue;
    if (st.i == st.j && d.parity(st.i) == 0)
      ts.fail(K::Semantic, st.pos, "bracket of a boson with itself must vanish", st.text);
    if (d.parity(k) != pij)
      ts.fail(K::Semantic, st.pos,
              "grading violation: " + scope.labels[st.i] + " and " + scope.labels[st.j] + " bracket to parity " +
                  std::to_string(pij) + ", but " + scope.labels[k] + " has parity " + std::to_string(d.parity(k)),
              st.text);
    const bool imaginary = d.parity(st.i) == 1 && d.parity(st.j) == 1;
    if (imaginary ? !c.re().is_zero() : !c.im().is_zero())
      ts.fail(K::Semantic, st.pos,
              std::string("coefficient of ") + scope.labels[k] + (imaginary ? " must be pure imaginary" : " must be real"),
              st.text);
    st.rhs.push_back({k, c});
  }
  return st;
}

void read_generators(TokenStream& ts, std::vector<std::string>& into) {
  ts.expect_punct(":", "after the generator keyword");
  while (!ts.is_punct(";")) {
    Token t = ts.expect_ident("in generator list");
    into.push_back(t.text);
  }
  ts.next();
}

SymbolicAlgebra parse_block(TokenStream& ts) {
  ts.expect_keyword("algebra", "to start a block");
  Token name = ts.expect_ident("as the algebra name");
  ts.expect_punct("{", "to open the algebra block");
  std::vector<std::string> bosons, fermions;
  std::vector<ParamDecl> params;
  std::vector<Statement> stmts;
  std::optional<BracketScope> scope;
  std::set<std::pair<int, int>> seen;

  auto fix_scope = [&](const SourcePos& pos) -> BracketScope& {
    if (!scope) {
      if (bosons.empty() && fermions.empty())
        ts.fail(K::Semantic, pos, "generators must be declared before brackets");
      BracketScope s{GradedDims(static_cast<int>(bosons.size()), static_cast<int>(fermions.size())), bosons, {}};
      s.labels.insert(s.labels.end(), fermions.begin(), fermions.end());
      for (size_t a = 0; a < s.labels.size(); ++a)
        for (size_t b = a + 1; b < s.labels.size(); ++b)
          if (s.labels[a] == s.labels[b]) ts.fail(K::Semantic, pos, "generator '" + s.labels[a] + "' declared twice");
      scope = s;
    }
    for (auto& p : params) scope->params.insert(p.name);
    return *scope;
  };

  while (!ts.is_punct("}")) {
    if (ts.at_end()) ts.syntax_error("unterminated algebra block '" + name.text + "'");
    SourcePos pos = ts.peek().pos;
    if (ts.accept_ident("bosons")) {
      if (scope) ts.fail(K::Semantic, pos, "generator list after brackets");
      read_generators(ts, bosons);
    } else if (ts.accept_ident("fermions")) {
      if (scope) ts.fail(K::Semantic, pos, "generator list after brackets");
      read_generators(ts, fermions);
    } else if (ts.accept_ident("param")) {
      auto p = parse_param_decl(ts);
      bool clash = std::count(bosons.begin(), bosons.end(), p.name) || std::count(fermions.begin(), fermions.end(), p.name) ||
                   find_param(params, p.name);
      if (clash) ts.fail(K::Semantic, pos, "name '" + p.name + "' already declared");
      params.push_back(p);
    } else {
      auto& sc = fix_scope(pos);
      auto st = parse_statement(ts, sc);
      auto key = std::minmax(st.i, st.j);
      if (!seen.insert(key).second) ts.fail(K::Semantic, st.pos, "bracket stated twice", st.text);
      stmts.push_back(std::move(st));
    }
  }
  Token close = ts.next();
  auto& sc = fix_scope(close.pos);
  SymbolicAlgebra g(name.text, sc.dims);
  g.labels = sc.labels;
  g.params = params;
  for (auto& st : stmts)
    for (auto& [k, c] : st.rhs) g.add_bracket(st.i, st.j, k, c);
  return g;
}

}  // namespace

int BracketScope::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

const SymbolicAlgebra* AlgebraFile::find(const std::string& name) const {
  for (auto& g : algebras)
    if (g.name() == name) return &g;
  return nullptr;
}

AlgebraFile parse_algebra_file(const std::string& text, const std::string& source) {
  TokenStream ts(text, source);
  AlgebraFile f;
  while (!ts.at_end()) {
    SourcePos pos = ts.peek().pos;
    auto g = parse_block(ts);
    if (f.find(g.name())) ts.fail(K::Semantic, pos, "algebra '" + g.name() + "' defined twice");
    f.algebras.push_back(std::move(g));
  }
  return f;
}

SymbolicAlgebra parse_algebra(const std::string& text, const std::string& source) {
  auto f = parse_algebra_file(text, source);
  if (f.algebras.size() != 1)
    throw ParseError(K::Syntax, source, {}, "expected exactly one algebra block, found " + std::to_string(f.algebras.size()));
  return f.algebras.front();
}

Tensor3<MultiPoly> parse_bracket_block(TokenStream& ts, const BracketScope& scope, const char* stop) {
  SymbolicAlgebra g("", scope.dims);
  std::set<std::pair<int, int>> seen;
  while (!ts.at_end() && !(stop && ts.is_punct(stop))) {
    auto st = parse_statement(ts, scope);
    if (!seen.insert(std::minmax(st.i, st.j)).second) ts.fail(K::Semantic, st.pos, "bracket stated twice", st.text);
    for (auto& [k, c] : st.rhs) g.add_bracket(st.i, st.j, k, c);
  }
  return g.tensor();
}

SymbolicDual parse_dual_spec(const std::string& text, const SymbolicAlgebra& primal,
                             const std::vector<std::string>& extra_params, const std::string& source) {
  BracketScope scope{primal.dims(), {}, {}};
  for (int i = 0; i < primal.size(); ++i) scope.labels.push_back(primal.label(i));
  for (auto& p : primal.params) scope.params.insert(p.name);
  scope.params.insert(extra_params.begin(), extra_params.end());
  TokenStream ts(text, source);
  SymbolicDual d(primal.name() + " dual", primal.dims(), parse_bracket_block(ts, scope, nullptr));
  d.params = primal.params;
  return d;
}

ParamDecl parse_param_decl(TokenStream& ts) {
  ParamDecl p;
  SourcePos start = ts.peek().pos;
  p.name = ts.expect_ident("as the parameter name").text;
  if (p.name == "i" || p.name == "inf") ts.fail(K::Semantic, start, "'" + p.name + "' is reserved");
  ts.expect_keyword("in", "after the parameter name");
  ParamDomain& d = p.domain;
  if (ts.is_punct("{")) {
    d = ParamDomain::set(value_set(ts, "in the parameter set"));
    if (d.members.empty()) ts.fail(K::Semantic, start, "empty parameter set");
  } else {
    if (ts.accept_punct("("))
      d.lo_open = true;
    else if (ts.accept_punct("["))
      d.lo_open = false;
    else
      ts.syntax_error("expected '(', '[' or '{' to start the parameter domain");
    if (!accept_inf(ts, true)) d.lo = constant_value(ts, "lower bound");
    ts.expect_punct(",", "between bounds");
    if (!accept_inf(ts, false)) d.hi = constant_value(ts, "upper bound");
    if (ts.accept_punct(")"))
      d.hi_open = true;
    else if (ts.accept_punct("]"))
      d.hi_open = false;
    else
      ts.syntax_error("expected ')' or ']' to end the parameter domain");
    if ((!d.lo && !d.lo_open) || (!d.hi && !d.hi_open)) ts.fail(K::Semantic, start, "infinite bound must be open");
    if (ts.accept_punct("\\")) d.excluded = value_set(ts, "in the excluded set");
  }
  if (ts.accept_ident("samples")) {
    p.samples = value_set(ts, "in the sample set");
    for (auto& s : p.samples)
      if (!d.contains(s)) ts.fail(K::Semantic, start, "sample " + s.get_str() + " lies outside " + d.str());
  }
  ts.expect_punct(";", "to end the parameter declaration");
  return p;
}

std::string print_param_decl(const ParamDecl& p) {
  std::string s = "param " + p.name + " in ";
  const ParamDomain& d = p.domain;
  if (d.kind == ParamDomain::Kind::Set) {
    s += value_list(d.members);
  } else {
    s += d.lo_open ? "(" : "[";
    s += d.lo ? d.lo->get_str() : "-inf";
    s += ", ";
    s += d.hi ? d.hi->get_str() : "inf";
    s += d.hi_open ? ")" : "]";
    if (!d.excluded.empty()) s += " \\ " + value_list(d.excluded);
  }
  if (!p.samples.empty()) s += " samples " + value_list(p.samples);
  return s + ";";
}

std::string print_algebra(const SymbolicAlgebra& g) {
  std::ostringstream os;
  os << "algebra " << g.name() << " {\n  bosons:";
  for (int i = 0; i < g.dims().m; ++i) os << " " << g.label(i);
  os << ";\n  fermions:";
  for (int i = g.dims().m; i < g.size(); ++i) os << " " << g.label(i);
  os << ";\n";
  for (auto& p : g.params) os << "  " << print_param_decl(p) << "\n";
  for (auto& st : bracket_statements(g)) os << "  " << st << "\n";
  os << "}\n";
  return os.str();
}

std::string print_algebra_file(const AlgebraFile& f) {
  std::string s;
  for (size_t i = 0; i < f.algebras.size(); ++i) s += (i ? "\n" : "") + print_algebra(f.algebras[i]);
  return s;
}

bool same_definition(const SymbolicAlgebra& a, const SymbolicAlgebra& b) {
  if (a.name() != b.name() || !(a == b) || a.params != b.params) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.label(i) != b.label(i)) return false;
  return true;
}

std::set<std::string> MatrixLiteral::variables() const {
  std::set<std::string> out;
  for (auto& r : rows)
    for (auto& e : r) out.merge(lsb::variables(*e));
  return out;
}

MatrixLiteral parse_matrix_literal(TokenStream& ts) {
  MatrixLiteral m;
  m.pos = ts.peek().pos;
  ts.expect_punct("[", "to open the matrix");
  m.rows.emplace_back();
  while (true) {
    m.rows.back().push_back(parse_expression(ts));
    if (ts.accept_punct(",")) continue;
    if (ts.accept_punct(";")) {
      m.rows.emplace_back();
      continue;
    }
    ts.expect_punct("]", "to close the matrix");
    break;
  }
  for (auto& r : m.rows)
    if (r.size() != m.rows.size())
      ts.fail(K::Semantic, m.pos,
              "matrix must be square: " + std::to_string(m.rows.size()) + " rows but a row has " +
                  std::to_string(r.size()) + " entries");
  return m;
}

MatrixLiteral parse_matrix_literal(const std::string& text, const std::string& source) {
  TokenStream ts(text, source);
  auto m = parse_matrix_literal(ts);
  if (!ts.at_end()) ts.syntax_error("unexpected '" + ts.peek().text + "' after the matrix");
  return m;
}

SuperMatrix evaluate_matrix(const MatrixLiteral& m, GradedDims dims, const Assignment& at) {
  if (m.size() != dims.size())
    throw ParseError(K::Semantic, "<matrix>", m.pos,
                     "matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size()) + " but dims " +
                         dims.str() + " need " + std::to_string(dims.size()));
  MatQ out(m.size(), m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = eval(*m.rows[r][c], at);
  return SuperMatrix(dims, out);
}

MatP matrix_poly(const MatrixLiteral& m) {
  MatP out(m.size(), m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = to_poly(*m.rows[r][c]);
  return out;
}

}  // namespace lsb
