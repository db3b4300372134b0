#include "lsb/superalgebra.hpp"

namespace lsb {

LieSuperAlgebra specialize(const SymbolicAlgebra& g, const Assignment& at) {
  LieSuperAlgebra out(g.name(), g.dims(), g.tensor().map([&](const MultiPoly& p) { return p.eval(at); }));
  out.labels = g.labels;
  return out;
}

SymbolicAlgebra lift(const LieSuperAlgebra& g) {
  SymbolicAlgebra out(g.name(), g.dims(), g.tensor().map([](const GScalar& s) { return MultiPoly(s); }));
  out.labels = g.labels;
  out.params = g.params;
  return out;
}

std::optional<LieSuperAlgebra> as_numeric(const SymbolicAlgebra& g) {
  const int N = g.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        if (!g.f(i, j, k).is_constant()) return std::nullopt;
  LieSuperAlgebra out(g.name(), g.dims(), g.tensor().map([](const MultiPoly& p) { return p.constant(); }));
  out.labels = g.labels;
  return out;
}

LieSuperAlgebra abelian(GradedDims dims) {
  return LieSuperAlgebra("I" + dims.str(), dims);
}

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Antisymmetry:
      return "antisymmetry";
    case Violation::Kind::Grading:
      return "grading";
    case Violation::Kind::Reality:
      return "reality";
  }
  return "?";
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::string s;
  for (auto& v : violations) {
    s += std::string(kind_name(v.kind)) + " violation at (" + std::to_string(v.i + 1) + "," +
         std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + "): " + v.detail + "\n";
  }
  return s;
}

std::string coefficient_term(const MultiPoly& c, const std::string& gen, bool first) {
  std::string body;
  bool negative = false;
  if (c.terms().size() == 1) {
    auto& [m, v] = *c.terms().begin();
    bool compound = !v.is_real() && !v.is_pure_imaginary();
    if (compound) {
      body = "(" + c.str() + ")*" + gen;
    } else {
      std::string s = c.str();
      negative = s[0] == '-';
      if (negative) s = s.substr(1);
      body = s == "1" ? gen : s + "*" + gen;
    }
  } else {
    body = "(" + c.str() + ")*" + gen;
  }
  if (first) return negative ? "-" + body : body;
  return (negative ? " - " : " + ") + body;
}

std::vector<std::string> bracket_statements(const SymbolicAlgebra& g) {
  std::vector<std::string> out;
  const int N = g.size();
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      std::string rhs;
      for (int k = 0; k < N; ++k)
        if (!g.f(i, j, k).is_zero()) rhs += coefficient_term(g.f(i, j, k), g.label(k), rhs.empty());
      if (rhs.empty()) continue;
      bool odd = g.parity(i) == 1 && g.parity(j) == 1;
      out.push_back(std::string(odd ? "{" : "[") + g.label(i) + "," + g.label(j) + (odd ? "}" : "]") + " = " +
                    rhs + ";");
    }
  return out;
}

}  // namespace lsb
