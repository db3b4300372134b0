#ifndef LSB_PARSER_HPP
#define LSB_PARSER_HPP

#include <set>
#include <string>
#include <vector>

#include "lsb/bialgebra.hpp"
#include "lsb/expr.hpp"
#include "lsb/lexer.hpp"

namespace lsb {

// algebra NAME { bosons: ...; fermions: ...; param ...; [Xi,Xj] = ...; }
struct AlgebraFile {
  std::vector<SymbolicAlgebra> algebras;
  const SymbolicAlgebra* find(const std::string& name) const;
};

AlgebraFile parse_algebra_file(const std::string& text, const std::string& source = "<input>");
// Text holding exactly one block.
SymbolicAlgebra parse_algebra(const std::string& text, const std::string& source = "<input>");

std::string print_algebra(const SymbolicAlgebra& g);
std::string print_algebra_file(const AlgebraFile& f);
// Everything the printer emits: name, grading, labels, params, constants.
bool same_definition(const SymbolicAlgebra& a, const SymbolicAlgebra& b);

// Generators and parameter names visible to bracket statements.
struct BracketScope {
  GradedDims dims;
  std::vector<std::string> labels;
  std::set<std::string> params;
  int index_of(const std::string& label) const;  // -1 if unknown
};

// Statements up to (not including) `stop` or the end of input. Coefficients are
// polynomial in the scope's parameters; grading violations are semantic errors.
Tensor3<MultiPoly> parse_bracket_block(TokenStream& ts, const BracketScope& scope, const char* stop);

// Dual constants written with the primal's generator names (tilde-free).
SymbolicDual parse_dual_spec(const std::string& text, const SymbolicAlgebra& primal,
                             const std::vector<std::string>& extra_params = {},
                             const std::string& source = "<dual>");

// After the `param` keyword: NAME in DOMAIN [samples {v, ...}] ;
// DOMAIN is (lo,hi] style with -inf/inf, optional "\ {v, ...}", or a set {v, ...}.
ParamDecl parse_param_decl(TokenStream& ts);
std::string print_param_decl(const ParamDecl& p);

// [a, b; c, d], entries are expressions.
struct MatrixLiteral {
  std::vector<std::vector<ExprPtr>> rows;
  SourcePos pos;
  int size() const { return static_cast<int>(rows.size()); }
  std::set<std::string> variables() const;
};

MatrixLiteral parse_matrix_literal(TokenStream& ts);
MatrixLiteral parse_matrix_literal(const std::string& text, const std::string& source = "<matrix>");
SuperMatrix evaluate_matrix(const MatrixLiteral& m, GradedDims dims, const Assignment& at = {});
MatP matrix_poly(const MatrixLiteral& m);

}  // namespace lsb

#endif
