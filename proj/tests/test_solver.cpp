#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "lsb/solver.hpp"

using namespace lsb;
using fx::S;

namespace {

MultiPoly V(const char* v) { return MultiPoly::var(v); }

SymbolicAlgebra symbolic_C1p() {
  SymbolicAlgebra g("C1p", GradedDims(2, 1));
  g.add_bracket(0, 1, 1, MultiPoly(1));
  g.add_bracket(0, 2, 2, V("p"));
  g.params.push_back({"p", ParamDomain::nonzero(), {}});
  return g;
}

// Sample each branch at small integers and confirm a genuine bialgebra comes out.
void check_branches_are_bialgebras(const LieSuperAlgebra& g, const DualSolutionFamily& fam) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> val(-3, 3);
  for (auto& b : fam.branches) {
    REQUIRE(!b.is_variety());
    for (int t = 0; t < 5; ++t) {
      Assignment at;
      for (auto& p : fam.free_params) at[p] = GScalar(val(rng));
      for (auto& [v, e] : b.solution) at.erase(v);
      for (auto& [v, e] : b.solution) at[v] = e.eval(at);
      auto d = family_specialize(fam, at);
      CHECK(is_bialgebra(g, d));
    }
  }
}

}  // namespace

TEST_CASE("unknown enumeration") {
  auto u = enumerate_unknowns(GradedDims(1, 1));
  REQUIRE(u.size() == 2);
  CHECK(u[0].label() == "ft22_1");
  CHECK(u[0].imaginary);
  CHECK(u[1].label() == "ft12_2");
  std::vector<std::string> l21, l12;
  for (auto& x : enumerate_unknowns(GradedDims(2, 1))) l21.push_back(x.label());
  for (auto& x : enumerate_unknowns(GradedDims(1, 2))) l12.push_back(x.label());
  CHECK(l21 == std::vector<std::string>{"ft33_1", "ft12_1", "ft33_2", "ft12_2", "ft13_3", "ft23_3"});
  CHECK(l12 == std::vector<std::string>{"ft22_1", "ft33_1", "ft23_1", "ft12_2", "ft13_2", "ft12_3", "ft13_3"});
}

TEST_CASE("coordinates round trip") {
  auto dims = GradedDims(1, 2);
  auto u = enumerate_unknowns(dims);
  VecP c(u.size());
  for (size_t k = 0; k < u.size(); ++k) c(k) = MultiPoly(static_cast<long>(k) - 3);
  auto d = dual_from_coords(dims, u, c);
  CHECK(validate_dual(d).ok());
  auto back = coords_of(d, u);
  REQUIRE(back);
  CHECK(*back == c);
  SymbolicDual bad("bad", dims);
  bad.set_raw(1, 1, 0, MultiPoly(1));  // real where an imaginary value is required
  CHECK(!coords_of(bad, u));
}

TEST_CASE("linear factors") {
  auto f = linear_factors(V("a") * V("b"));
  REQUIRE(f);
  CHECK(f->size() == 2);
  auto g = linear_factors(V("a") * V("a") - V("c") * V("c"));
  REQUIRE(g);
  CHECK(g->size() == 2);
  for (auto& x : *g) CHECK(x.total_degree() == 1);
  auto h = linear_factors((V("a") + MultiPoly(2) * V("b")) * (V("a") - MultiPoly(1)) * V("c"));
  REQUIRE(h);
  CHECK(h->size() == 3);
  CHECK(!linear_factors(V("a") * V("a") + V("b") * V("b")));
  CHECK(!linear_factors(V("a") * V("b") - MultiPoly(1)));
}

TEST_CASE("branch splitting and subsumption") {
  auto br = split_branches({V("a") * V("c"), V("b") * V("c")}, {"a", "b", "c"});
  REQUIRE(br.size() == 2);
  int generic = 0;
  for (auto& b : br) {
    if (b.solution.size() == 1) {
      CHECK(b.solution.count("c"));
      ++generic;
    } else {
      CHECK(b.solution.at("a").is_zero());
      CHECK(b.solution.at("b").is_zero());
    }
  }
  CHECK(generic == 1);
  // a = 0 together with a*b = 0 leaves a single branch
  CHECK(split_branches({V("a"), V("a") * V("b")}, {"a", "b"}).size() == 1);
  auto var = split_branches({V("a") * V("a") + V("b") * V("b") - MultiPoly(1)}, {"a", "b"});
  REQUIRE(var.size() == 1);
  CHECK(var[0].is_variety());
}

TEST_CASE("solution families of the two-dimensional algebras") {
  auto B = solve_duals(fx::B());
  CHECK(B.nullity() == 1);
  CHECK(B.quad_constraints.empty());
  CHECK(B.general().ft(1, 1, 0) == MultiPoly(GScalar::i()) * V("alpha"));

  auto A = solve_duals(fx::A11A());
  CHECK(A.nullity() == 1);
  CHECK(A.general().ft(0, 1, 1) == V("alpha"));
  CHECK(A.general().ft(1, 1, 0).is_zero());

  auto I = solve_duals(abelian(GradedDims(1, 1)));
  CHECK(I.nullity() == 2);
  REQUIRE(I.quad_constraints.size() == 1);
  CHECK(I.quad_constraints[0] == V("alpha") * V("beta"));
  CHECK(I.branches.size() == 2);
  check_branches_are_bialgebras(abelian(GradedDims(1, 1)), I);
}

TEST_CASE("solution families of the three-dimensional algebras") {
  for (auto g : {fx::C2p("1/2"), fx::C2p("1"), fx::C3(), fx::C4(), fx::C5p("0"), fx::C5p("2")}) {
    auto fam = solve_duals(g);
    CHECK(fam.nullity() == 3);
    CHECK(fam.quad_constraints.empty());
    auto d = fam.general();
    CHECK(d.ft(1, 1, 0) == MultiPoly(GScalar::i()) * V("alpha"));
    CHECK(d.ft(2, 2, 0) == MultiPoly(GScalar::i()) * V("beta"));
    CHECK(d.ft(1, 2, 0) == MultiPoly(GScalar::i()) * V("gamma"));
    check_branches_are_bialgebras(g, fam);
  }
  for (auto g : {fx::A2A1(), fx::A2A2()}) {
    auto fam = solve_duals(g);
    CHECK(fam.nullity() == 4);
    CHECK(fam.quad_constraints.empty());
  }
  auto h = solve_duals(fx::C1h());
  CHECK(h.nullity() == 3);
  CHECK(h.branches.size() == 2);
  check_branches_are_bialgebras(fx::C1h(), h);
}

TEST_CASE("symbolic parameter and special values") {
  auto fam = solve_duals(symbolic_C1p());
  CHECK(fam.nullity() == 2);
  CHECK(fam.primal_params == std::vector<std::string>{"p"});
  REQUIRE(fam.quad_constraints.size() == 1);
  CHECK(fam.quad_constraints[0].eval({{"alpha", S("1")}, {"beta", S("1")}, {"p", S("-1/2")}}).is_zero());
  bool half = false;
  for (auto& s : fam.special)
    if (s.value == mpq_class(1, 2)) {
      half = true;
      CHECK(s.reason == "rank drop");
      CHECK(s.family->nullity() == 3);
    }
  CHECK(half);
  // specializing the generic family agrees with solving at a generic value
  auto at2 = solve_duals(fx::C1p("2"));
  CHECK(at2.nullity() == 2);
  CHECK(at2.quad_constraints.size() == 1);
}

TEST_CASE("family membership") {
  auto C4 = solve_duals(fx::C4());
  SymbolicDual d("d", GradedDims(1, 2));
  d.add_cobracket(1, 1, 0, MultiPoly(GScalar::i()) * V("k"));
  d.add_cobracket(2, 2, 0, MultiPoly(GScalar::i()));
  auto c = family_contains(C4, d);
  REQUIRE(c);
  CHECK((*c)[0] == V("k"));
  CHECK((*c)[1] == MultiPoly(1));
  CHECK((*c)[2].is_zero());
  SymbolicDual off("off", GradedDims(1, 2));
  off.add_cobracket(0, 1, 1, MultiPoly(1));
  CHECK(!family_contains(C4, off));

  auto h = solve_duals(fx::C1h());
  auto entry = lift(fx::dual(2, 1, {{1, 2, 1, "1"}, {2, 3, 3, "1/2"}}));
  CHECK(family_contains(h, entry));
  auto wrong = lift(fx::dual(2, 1, {{1, 2, 1, "1"}, {2, 3, 3, "-1/2"}}));
  CHECK(!family_contains(h, wrong));  // in the span, off the constraint set

  auto I = solve_duals(abelian(GradedDims(1, 1)));
  CHECK_THROWS_AS(family_specialize(I, {{"alpha", S("1")}, {"beta", S("1")}}), ConstraintViolation);
}

TEST_CASE("parameter names avoid primal names") {
  auto n = parameter_names(3, {"beta"});
  CHECK(n == std::vector<std::string>{"alpha", "gamma", "delta"});
}
