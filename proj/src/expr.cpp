#include "lsb/expr.hpp"

namespace lsb {

namespace {

ExprPtr node(Expr::Op op, SourcePos pos, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->pos = pos;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ExprPtr parse_sum(TokenStream& ts);

ExprPtr parse_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Tok::Number || t.kind == Tok::Imag) {
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    e->num = GScalar(mpq_class(t.text));
    if (t.kind == Tok::Imag) e->num = e->num * GScalar::i();
    ts.next();
    return e;
  }
  if (t.kind == Tok::Ident) {
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    if (t.text == "i") {
      e->num = GScalar::i();
    } else {
      e->op = Expr::Op::Var;
      e->name = t.text;
    }
    ts.next();
    return e;
  }
  if (ts.is_punct("(")) {
    ts.next();
    auto e = parse_sum(ts);
    ts.expect_punct(")", "to close parenthesis");
    return e;
  }
  ts.syntax_error("expected a number, name or '(' in expression, found '" + t.text + "'");
}

ExprPtr parse_power(TokenStream& ts) {
  auto base = parse_atom(ts);
  if (!ts.is_punct("^")) return base;
  SourcePos pos = ts.next().pos;
  bool neg = ts.accept_punct("-");
  if (ts.peek().kind != Tok::Number) ts.syntax_error("exponent must be an integer");
  auto e = node(Expr::Op::Pow, pos, base);
  std::const_pointer_cast<Expr>(e)->power = (neg ? -1 : 1) * std::stol(ts.next().text);
  return e;
}

ExprPtr parse_unary(TokenStream& ts) {
  if (ts.is_punct("-")) {
    SourcePos pos = ts.next().pos;
    return node(Expr::Op::Neg, pos, parse_unary(ts));
  }
  if (ts.accept_punct("+")) return parse_unary(ts);
  return parse_power(ts);
}

ExprPtr parse_product(TokenStream& ts) {
  auto e = parse_unary(ts);
  while (ts.is_punct("*") || ts.is_punct("/")) {
    Token op = ts.next();
    e = node(op.text == "*" ? Expr::Op::Mul : Expr::Op::Div, op.pos, e, parse_unary(ts));
  }
  return e;
}

ExprPtr parse_sum(TokenStream& ts) {
  auto e = parse_product(ts);
  while (ts.is_punct("+") || ts.is_punct("-")) {
    Token op = ts.next();
    e = node(op.text == "+" ? Expr::Op::Add : Expr::Op::Sub, op.pos, e, parse_product(ts));
  }
  return e;
}

}  // namespace

ExprPtr parse_expression(TokenStream& ts) { return parse_sum(ts); }

ExprPtr parse_expression(const std::string& text) {
  TokenStream ts(text, "<expression>");
  auto e = parse_sum(ts);
  if (!ts.at_end()) ts.syntax_error("unexpected '" + ts.peek().text + "' after expression");
  return e;
}

MultiPoly to_poly(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Num: return MultiPoly(e.num);
    case Expr::Op::Var: return MultiPoly::var(e.name);
    case Expr::Op::Add: return to_poly(*e.a) + to_poly(*e.b);
    case Expr::Op::Sub: return to_poly(*e.a) - to_poly(*e.b);
    case Expr::Op::Mul: return to_poly(*e.a) * to_poly(*e.b);
    case Expr::Op::Neg: return -to_poly(*e.a);
    case Expr::Op::Div: {
      MultiPoly d = to_poly(*e.b);
      auto c = d.as_constant();
      if (!c) throw ExprError("division by a non-constant expression", e.pos);
      if (c->is_zero()) throw ExprError("division by zero", e.pos);
      return to_poly(*e.a) / *c;
    }
    case Expr::Op::Pow:
      if (e.power < 0) throw ExprError("negative power in a polynomial", e.pos);
      return pow(to_poly(*e.a), static_cast<int>(e.power));
  }
  return MultiPoly();
}

GScalar eval(const Expr& e, const Assignment& at) {
  switch (e.op) {
    case Expr::Op::Num: return e.num;
    case Expr::Op::Var: {
      auto it = at.find(e.name);
      if (it == at.end()) throw ExprError("no value for '" + e.name + "'", e.pos);
      return it->second;
    }
    case Expr::Op::Add: return eval(*e.a, at) + eval(*e.b, at);
    case Expr::Op::Sub: return eval(*e.a, at) - eval(*e.b, at);
    case Expr::Op::Mul: return eval(*e.a, at) * eval(*e.b, at);
    case Expr::Op::Neg: return -eval(*e.a, at);
    case Expr::Op::Div: {
      GScalar d = eval(*e.b, at);
      if (d.is_zero()) throw ExprError("division by zero", e.pos);
      return eval(*e.a, at) / d;
    }
    case Expr::Op::Pow: {
      GScalar b = eval(*e.a, at);
      if (e.power < 0) {
        if (b.is_zero()) throw ExprError("division by zero", e.pos);
        return pow(b.inverse(), static_cast<int>(-e.power));
      }
      return pow(b, static_cast<int>(e.power));
    }
  }
  return GScalar(0);
}

std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  if (e.op == Expr::Op::Var) out.insert(e.name);
  for (auto* k : {e.a.get(), e.b.get()})
    if (k) out.merge(variables(*k));
  return out;
}

namespace {

// binding strength: sums 1, products 2, negation 3, powers 4, atoms 5
int strength(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    case Expr::Op::Pow: return 4;
    case Expr::Op::Var: return 5;
    case Expr::Op::Num: break;
  }
  const GScalar& v = e.num;
  if (!v.is_real() && !v.is_pure_imaginary()) return 1;
  const mpq_class& q = v.is_real() ? v.re() : v.im();
  if (sgn(q) < 0) return 1;
  return q.get_den() == 1 ? 5 : 2;
}

std::string wrap(const Expr& e, bool paren) {
  std::string s = expr_str(e);
  return paren ? "(" + s + ")" : s;
}

}  // namespace

std::string expr_str(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Num: return e.num.str();
    case Expr::Op::Var: return e.name;
    case Expr::Op::Add: return wrap(*e.a, false) + " + " + wrap(*e.b, strength(*e.b) < 1);
    case Expr::Op::Sub: return wrap(*e.a, false) + " - " + wrap(*e.b, strength(*e.b) <= 1);
    case Expr::Op::Mul: return wrap(*e.a, strength(*e.a) < 2) + "*" + wrap(*e.b, strength(*e.b) <= 2);
    case Expr::Op::Div: return wrap(*e.a, strength(*e.a) < 2) + "/" + wrap(*e.b, strength(*e.b) <= 2);
    case Expr::Op::Neg: return "-" + wrap(*e.a, strength(*e.a) < 3);
    case Expr::Op::Pow: return wrap(*e.a, strength(*e.a) < 5) + "^" + std::to_string(e.power);
  }
  return "";
}

}  // namespace lsb
