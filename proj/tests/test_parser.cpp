#include "doctest.h"

#include "fixtures.hpp"
#include "lsb/parser.hpp"

using namespace lsb;
using fx::S;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_algebra_file(text, "t.lsb");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw;
}

}  // namespace

TEST_CASE("expressions") {
  CHECK(eval(*parse_expression("3i/2 - 1/2"), {}) == S("-1/2+3i/2"));
  CHECK(eval(*parse_expression("2^3 - (1+i)*(1-i)"), {}) == S("6"));
  CHECK(eval(*parse_expression("-c22*g/b"), {{"c22", S("2")}, {"g", S("3")}, {"b", S("-1")}}) == S("6"));
  CHECK(eval(*parse_expression("x^-2"), {{"x", S("2")}}) == S("1/4"));
  CHECK(to_poly(*parse_expression("(a+b)^2")) ==
        MultiPoly::var("a") * MultiPoly::var("a") + MultiPoly(2) * MultiPoly::var("a") * MultiPoly::var("b") +
            MultiPoly::var("b") * MultiPoly::var("b"));
  CHECK_THROWS_AS(to_poly(*parse_expression("1/a")), ExprError);
  CHECK_THROWS_AS(eval(*parse_expression("1/(a-a)"), {{"a", S("1")}}), ExprError);
  CHECK_THROWS_AS(eval(*parse_expression("q"), {}), ExprError);
  CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
  CHECK(variables(*parse_expression("a*b + i*c")) == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("algebra blocks") {
  auto B = parse_algebra("algebra B { bosons: X1; fermions: X2; [X1,X2] = X2; }");
  CHECK(B == lift(fx::B()));
  auto A = parse_algebra("algebra A11A { bosons: X1; fermions: X2; {X2,X2} = i*X1; }");
  CHECK(A == lift(fx::A11A()));
  auto C4 = parse_algebra(
      "# comment line\n"
      "algebra C4 {\n  bosons: X1;\n  fermions: X2 X3;\n"
      "  [X1,X2] = X2;  # trailing comment\n  [X1,X3] = X2 + X3;\n}\n");
  CHECK(C4 == lift(fx::C4()));
  auto C5 = parse_algebra(
      "algebra C5p { bosons: X1; fermions: X2 X3; param p in [0, inf); "
      "[X1,X2] = p*X2 - X3; [X1,X3] = X2 + p*X3; }");
  REQUIRE(C5.params.size() == 1);
  CHECK(C5.params[0].domain.contains(mpq_class(0)));
  CHECK(!C5.params[0].domain.contains(mpq_class(-1)));
  CHECK(specialize(C5, {{"p", S("2")}}) == fx::C5p("2"));
  // reversed order fills by super antisymmetry
  auto rev = parse_algebra("algebra R { bosons: X1; fermions: X2; [X2,X1] = -X2; }");
  CHECK(rev == lift(fx::B()));
}

TEST_CASE("parameter declarations") {
  auto g = parse_algebra(
      "algebra P { bosons: X1; fermions: X2 X3; "
      "param p in [-1, 1) \\ {0} samples {-1, -1/2, 1/2}; param e in {-1, 1}; "
      "[X1,X2] = X2; [X1,X3] = p*X3; {X2,X2} = i*e*X1; }");
  REQUIRE(g.params.size() == 2);
  auto& p = g.params[0];
  CHECK(p.domain.contains(mpq_class(-1)));
  CHECK(!p.domain.contains(mpq_class(1)));
  CHECK(!p.domain.contains(mpq_class(0)));
  CHECK(p.samples.size() == 3);
  CHECK(g.params[1].domain.kind == ParamDomain::Kind::Set);
  CHECK(print_param_decl(p) == "param p in [-1, 1) \\ {0} samples {-1, -1/2, 1/2};");
  CHECK(parse_failure("algebra Q { bosons: X1; param p in (0,1) samples {2}; }").kind == ParseError::Kind::Semantic);
  CHECK(parse_failure("algebra Q { bosons: X1; param p in [-inf,1); }").kind == ParseError::Kind::Semantic);
}

TEST_CASE("diagnostics carry positions") {
  auto bad = parse_failure("algebra Bad {\n  bosons: X1;\n  fermions: X2;\n  [X1,X1] = X2;\n}\n");
  CHECK(bad.kind == ParseError::Kind::Semantic);
  CHECK(bad.pos.line == 4);
  CHECK(bad.pos.col == 3);
  CHECK(bad.statement == "[X1,X1] = X2;");

  auto grading = parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2] = X1; }");
  CHECK(grading.kind == ParseError::Kind::Semantic);
  CHECK(std::string(grading.what()).find("grading violation") != std::string::npos);
  CHECK(grading.pos.col == 39);

  auto real = parse_failure("algebra G { bosons: X1; fermions: X2; {X2,X2} = X1; }");
  CHECK(std::string(real.what()).find("pure imaginary") != std::string::npos);

  CHECK(parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X3] = X2; }").message == "unknown generator 'X3'");
  CHECK(parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2] = q*X2; }").message == "undeclared name 'q'");
  CHECK(parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2] = X2*X2; }").kind == ParseError::Kind::Semantic);
  CHECK(parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2] = X2; [X2,X1] = X2; }").message ==
        "bracket stated twice");

  auto lex = parse_failure("algebra G { bosons: X1; fermions: X2;\n [X1,X2] = X2 @ ; }");
  CHECK(lex.kind == ParseError::Kind::Lexical);
  CHECK(lex.pos.line == 2);
  CHECK(lex.pos.col == 15);

  auto syn = parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2 = X2; }");
  CHECK(syn.kind == ParseError::Kind::Syntax);
  CHECK(syn.pos.col == 46);
  CHECK(parse_failure("algebra G { bosons: X1; fermions: X2; [X1,X2] = X2;").kind == ParseError::Kind::Syntax);
}

TEST_CASE("printer round trip") {
  std::string text =
      "algebra C1h { bosons: X1 X2; fermions: X3; [X1,X2] = X2; [X1,X3] = 1/2*X3; {X3,X3} = i*X2; }\n"
      "algebra M { bosons: X1; fermions: X2 X3; param p in (-inf, inf) \\ {0}; param k in (0, 1] samples {1/2};"
      " [X1,X2] = p*X2 - 3i/2*k*X3 + (1+i)*X3 - i*X3; [X1,X3] = (p^2 - 2*p*k)*X2; }\n";
  // a non-real coefficient on a boson-fermion bracket is rejected
  CHECK_THROWS_AS(parse_algebra_file(text), ParseError);
  text =
      "algebra C1h { bosons: X1 X2; fermions: X3; [X1,X2] = X2; [X1,X3] = 1/2*X3; {X3,X3} = i*X2; }\n"
      "algebra M { bosons: X1; fermions: X2 X3; param p in (-inf, inf) \\ {0}; param k in (0, 1] samples {1/2};"
      " [X1,X2] = p*X2 - 3/2*k*X3; [X1,X3] = (p^2 - 2*p*k)*X2; {X2,X3} = i*p*k*X1 - 2i/3*X1; }\n";
  auto f = parse_algebra_file(text);
  auto printed = print_algebra_file(f);
  auto again = parse_algebra_file(printed);
  REQUIRE(again.algebras.size() == 2);
  for (size_t i = 0; i < 2; ++i) CHECK(same_definition(f.algebras[i], again.algebras[i]));
  CHECK(print_algebra_file(again) == printed);
  CHECK(f.algebras[0] == lift(fx::C1h()));
}

TEST_CASE("dual specs and matrices") {
  auto B = lift(fx::B());
  auto d = parse_dual_spec("{X2,X2} = i*X1;", B);
  CHECK(d == lift(fx::dual(1, 1, {{2, 2, 1, "i"}})));
  auto fam = parse_dual_spec("{X2,X2} = i*alpha*X1;", B, {"alpha"});
  CHECK(fam.ft(1, 1, 0) == MultiPoly(GScalar::i()) * MultiPoly::var("alpha"));
  CHECK_THROWS_AS(parse_dual_spec("{X2,X2} = i*alpha*X1;", B), ParseError);

  auto m = parse_matrix_literal("[1, 0, 0; 0, c, 0; 0, d, c]");
  CHECK(m.size() == 3);
  CHECK(m.variables() == std::set<std::string>{"c", "d"});
  auto M = evaluate_matrix(m, GradedDims(1, 2), {{"c", S("3")}, {"d", S("5")}});
  CHECK(M(2, 1) == S("5"));
  CHECK(matrix_poly(m)(2, 2) == MultiPoly::var("c"));
  CHECK_THROWS_AS(parse_matrix_literal("[1, 0; 0]"), ParseError);
  CHECK_THROWS_AS(evaluate_matrix(parse_matrix_literal("[1]"), GradedDims(1, 1)), ParseError);
  CHECK_THROWS_AS(parse_matrix_literal("[1, 0; 0, 1] x"), ParseError);
}
