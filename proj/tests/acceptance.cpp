// Acceptance suite: one line per criterion (sub-lines where a criterion has
// independent parts). Every tolerance is exact zero.
//
//   acceptance [--expect-red ID,ID,...]
//
// Without --expect-red the exit status is 1 when any line is red. With it,
// the run succeeds only when the red lines are exactly the listed ones.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <algorithm>
#include <map>

#include "lsb/catalog.hpp"

using namespace lsb;

namespace {

struct Line {
  std::string id;
  bool ok;
  std::string detail;
};

std::vector<Line> lines;

void report(const std::string& id, bool ok, const std::string& detail) {
  lines.push_back({id, ok, detail});
  std::cout << (ok ? "PASS  " : "FAIL  ") << id << "  " << detail << std::endl;
}

GScalar Q(long p, long q = 1) { return GScalar::rational(p, q); }
GScalar S(const char* s) { return GScalar::parse(s); }

SuperMatrix SM(GradedDims d, std::initializer_list<GScalar> entries) {
  MatQ m(d.size(), d.size());
  auto it = entries.begin();
  for (int r = 0; r < d.size(); ++r)
    for (int c = 0; c < d.size(); ++c) m(r, c) = *it++;
  return SuperMatrix(d, m);
}

const Catalog& cat() {
  static Catalog c = Catalog::load_default();
  return c;
}

std::string str(size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------- 1

void ac1() {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = verify_catalog(cat());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::vector<std::string> checks{"primal_sj", "dual_sj", "mixed", "double_sj", "ad_invariance"};
  size_t good = 0;
  std::string first_bad;
  for (auto& e : cat().entries) {
    std::set<std::string> passed;
    for (auto& r : rep.records)
      if (r.entry == e.id && r.status == "pass" && r.residual_nonzero_count == 0) passed.insert(r.check);
    bool ok = passed.size() == checks.size();
    for (auto& c : checks) ok = ok && passed.count(c);
    good += ok;
    if (!ok && first_bad.empty()) first_bad = e.id;
  }
  std::ostringstream d;
  d << good << "/" << cat().entries.size() << " pairs certified on 5 identities, " << secs << " s";
  if (!first_bad.empty()) d << ", first failure " << first_bad;
  report("AC1 catalog soundness", good == 48 && cat().entries.size() == 48 && secs < 10, d.str());
}

// ---------------------------------------------------------------- 2

void ac2() {
  const std::vector<std::string> names{"B", "C1p", "C2p", "C2_1", "C3", "C4", "C5p", "A11A", "C1h", "A11_2A_1", "A11_2A_2"};
  size_t good = 0, parametric = 0;
  std::string bad;
  for (auto& n : names) {
    const auto& g = cat().algebra(n);
    bool ok = validate_structure(g).ok() && super_jacobi_residual(g).zero();
    // the parameter must survive as a polynomial variable, not be sampled away
    if (!g.params.empty()) {
      ++parametric;
      bool has_var = false;
      for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
          for (int k = 0; k < g.size(); ++k) has_var = has_var || !g.f(i, j, k).is_constant();
      ok = ok && has_var;
    }
    good += ok;
    if (!ok) bad += " " + n;
  }
  report("AC2 tables 1-2 structure and super Jacobi", good == names.size(),
         str(good) + "/" + str(names.size()) + " algebras, " + str(parametric) + " symbolic in p" +
             (bad.empty() ? "" : "; failing:" + bad));
}

// ---------------------------------------------------------------- 3

bool lone_param(const MultiPoly& e, const std::vector<std::string>& params) {
  for (auto& p : params)
    if (e == MultiPoly::var(p)) return true;
  return false;
}

void ac3() {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  size_t families = 0, families_ok = 0;
  std::string detail;
  for (auto& rec : cat().automorphisms) {
    ++families;
    const auto& fam = rec.family;
    const auto& g = cat().algebra(fam.algebra);
    // C2p at p = 1 is C2_1, whose group is larger
    std::vector<mpq_class> pvals{0};
    std::string pname;
    if (!g.params.empty()) {
      pname = g.params[0].name;
      pvals.clear();
      for (auto& v : g.params[0].effective_samples())
        if (!(fam.algebra == "C2p" && v == 1)) pvals.push_back(v);
    }
    size_t members = 0, member_ok = 0, rejected = 0, closure_ok = 0, closure_total = 0;
    std::vector<std::pair<Assignment, SuperMatrix>> sampled;
    for (int tries = 0; members < 8 && tries < 1000; ++tries) {
      Assignment a;
      for (auto& p : fam.params) a[p] = Q(num(rng), den(rng));
      if (!pname.empty()) a[pname] = GScalar(pvals[members % pvals.size()]);
      if (!fam.admissible(a)) continue;
      auto M = fam.at(a);
      auto gp = specialize(g, a);
      ++members;
      if (verify_automorphism(gp, M).ok && aut_membership(fam, M)) ++member_ok;
      sampled.push_back({a, M});
    }
    // one entry changed: real change off the D block, imaginary on it
    const int N = fam.dims.size();
    for (int t = 0; t < 20; ++t) {
      auto& [a, M] = sampled[t % sampled.size()];
      int r, c;
      do {
        r = static_cast<int>(rng() % N);
        c = static_cast<int>(rng() % N);
      } while (lone_param(fam.shape(r, c), fam.params));
      GScalar delta = Q(num(rng) == 0 ? 1 : num(rng) | 1, den(rng));
      bool dblock = fam.dims.parity(r) == 1 && fam.dims.parity(c) == 0;
      auto P = M;
      P(r, c) = P(r, c) + (dblock ? delta * GScalar::i() : delta);
      bool not_member = !aut_membership(fam, P);
      bool not_aut = true;
      try {
        not_aut = !verify_automorphism(specialize(g, a), P).ok;
      } catch (const std::invalid_argument&) {  // not a transformation matrix at all
      } catch (const std::domain_error&) {
      }
      bool block_diag = fam.dims.parity(r) == fam.dims.parity(c);
      if (not_member && (!block_diag || not_aut)) ++rejected;
    }
    for (size_t i = 0; i < sampled.size(); ++i) {
      auto& [a, M] = sampled[i];
      auto& M2 = sampled[(i + 1) % sampled.size()].second;
      auto gp = specialize(g, a);
      // products only where both factors were drawn at the same algebra parameter
      bool same_p = pname.empty() || sampled[(i + 1) % sampled.size()].first.at(pname) == a.at(pname);
      auto inv = superinverse(M);
      closure_total += 1;
      closure_ok += aut_membership(fam, inv) && verify_automorphism(gp, inv).ok;
      if (same_p) {
        closure_total += 1;
        closure_ok += aut_membership(fam, M * M2) && verify_automorphism(gp, M * M2).ok;
      }
    }
    bool ok = members >= 5 && member_ok == members && rejected == 20 && closure_ok == closure_total;
    families_ok += ok;
    if (!ok)
      detail += " " + fam.algebra + "(members " + str(member_ok) + "/" + str(members) + ", rejected " + str(rejected) +
                "/20, closure " + str(closure_ok) + "/" + str(closure_total) + ")";
  }
  report("AC3 table 3 automorphism families", families == 11 && families_ok == families,
         str(families_ok) + "/" + str(families) + " families: >=5 members, 20/20 perturbations rejected, products and inverses closed" + detail);
}

// ---------------------------------------------------------------- 4

const SolutionRecord& record(const std::string& id) {
  for (auto& r : cat().solutions)
    if (r.id == id) return r;
  throw UnknownId(id);
}

SymbolicDual record_family(const std::string& id, const SymbolicAlgebra& g) {
  auto& r = record(id);
  std::vector<std::string> names;
  for (auto& p : r.params) names.push_back(p.name);
  return parse_dual_spec(r.family_text, g, names);
}

bool same_components(const SymbolicDual& a, const SymbolicDual& b) {
  int N = a.dims().size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        if (!(a.ft(i, j, k) == b.ft(i, j, k))) return false;
  return true;
}

void ac4() {
  auto& B = cat().algebra("B");
  auto fB = solve_duals(B);
  bool okB = fB.nullity() == 1 && fB.quad_constraints.empty() && same_components(fB.general(), record_family("B", B));

  auto& C4 = cat().algebra("C4");
  auto f4 = solve_duals(C4);
  bool ok4 = f4.nullity() == 3 && f4.quad_constraints.empty() &&
             same_components(f4.general(), record_family("C2p-C5p", C4));

  auto& C1h = cat().algebra("C1h");
  auto fh = solve_duals(C1h);
  bool okh = true;
  for (auto* id : {"C1h.i", "C1h.ii"}) {
    auto d = record_family(id, C1h);
    okh = okh && family_contains(fh, d) && record(id).params.size() < static_cast<size_t>(fh.nullity());
  }

  auto& C1p = cat().algebra("C1p");
  auto fp = solve_duals(C1p);
  bool okp = fp.primal_params == std::vector<std::string>{"p"} && family_contains(fp, record_family("C1p.i", C1p));
  bool half = false;
  for (auto& s : fp.special) half = half || (s.value == mpq_class(1, 2) && s.reason == "rank drop" && s.family &&
                                             s.family->nullity() > fp.nullity());

  report("AC4 solver reproduction", okB && ok4 && okh && okp && half,
         std::string("B nullity ") + str(fB.nullity()) + (okB ? " exact" : " MISMATCH") + "; C4 nullity " +
             str(f4.nullity()) + (ok4 ? " exact" : " MISMATCH") + "; C1_{1/2} items (i),(ii) " +
             (okh ? "proper sub-loci" : "NOT contained") + "; C1_p item (i) " + (okp ? "contained" : "MISSING") +
             ", p = 1/2 rank drop " + (half ? "detected" : "MISSED"));
}

// ---------------------------------------------------------------- 5

// Independent of the solver: every grading-allowed dual component on the grid,
// checked with the bialgebra identities directly. The mixed identity is linear
// in the dual, so its residual is assembled from the unit duals in machine
// integers (grid values doubled) and only its zeros get the full exact check.
struct GridResult {
  size_t points = 0, mixed_zero = 0, bialgebras = 0, outside = 0;
};

GridResult grid_search(const LieSuperAlgebra& g, const DualSolutionFamily& fam) {
  const auto dims = g.dims();
  const int N = dims.size();
  struct Comp {
    int i, j, k;
    bool imag;
  };
  std::vector<Comp> comps;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      bool ff = dims.parity(i) == 1 && dims.parity(j) == 1;
      if (i == j && !ff) continue;
      for (int k = 0; k < N; ++k)
        if ((dims.parity(i) + dims.parity(j)) % 2 == dims.parity(k)) comps.push_back({i, j, k, ff && dims.parity(k) == 0});
    }
  auto unit = [&](const Comp& c, const GScalar& v) {
    DualStructure d("grid", dims);
    if (!v.is_zero()) d.add_cobracket(c.i, c.j, c.k, c.imag ? v * GScalar::i() : v);
    return d;
  };
  // residual columns as Gaussian integers
  std::map<std::array<int, 4>, size_t> row_of;
  std::vector<std::vector<std::pair<long, long>>> cols;
  for (auto& c : comps) {
    auto r = mixed_jacobi_residual(g, unit(c, 1));
    std::vector<std::pair<long, long>> col;
    for (auto& e : r.nonzero) {
      if (e.value.re().get_den() != 1 || e.value.im().get_den() != 1)
        throw std::runtime_error("grid oracle expects integral structure constants");
      auto [it, fresh] = row_of.emplace(e.index, row_of.size());
      if (col.size() <= it->second) col.resize(it->second + 1, {0, 0});
      col[it->second] = {e.value.re().get_num().get_si(), e.value.im().get_num().get_si()};
    }
    cols.push_back(col);
  }
  for (auto& col : cols) col.resize(row_of.size(), {0, 0});

  const std::vector<long> twice{-4, -2, -1, 0, 1, 2, 4};
  const size_t V = twice.size();
  std::vector<size_t> digit(comps.size(), 0);
  std::vector<std::pair<long, long>> acc(row_of.size());
  GridResult res;
  while (true) {
    ++res.points;
    std::fill(acc.begin(), acc.end(), std::pair<long, long>{0, 0});
    for (size_t c = 0; c < comps.size(); ++c) {
      long v = twice[digit[c]];
      if (v == 0) continue;
      for (size_t r = 0; r < acc.size(); ++r) {
        acc[r].first += v * cols[c][r].first;
        acc[r].second += v * cols[c][r].second;
      }
    }
    bool mixed_zero = std::all_of(acc.begin(), acc.end(), [](auto& p) { return p.first == 0 && p.second == 0; });
    if (mixed_zero) {
      ++res.mixed_zero;
      DualStructure d("grid", dims);
      for (size_t c = 0; c < comps.size(); ++c) {
        GScalar v = Q(twice[digit[c]], 2);
        if (!v.is_zero()) d.add_cobracket(comps[c].i, comps[c].j, comps[c].k, comps[c].imag ? v * GScalar::i() : v);
      }
      if (mixed_jacobi_residual(g, d).zero() && dual_jacobi_residual(d).zero()) {
        ++res.bialgebras;
        if (!family_contains(fam, lift(d))) ++res.outside;
      }
    }
    size_t c = 0;
    while (c < digit.size() && ++digit[c] == V) digit[c++] = 0;
    if (c == digit.size()) break;
  }
  return res;
}

void ac5() {
  bool ok = true;
  std::string detail;
  for (auto* name : {"B", "A11A", "C4", "C3"}) {
    auto g = *as_numeric(cat().algebra(name));
    auto r = grid_search(g, solve_duals(g));
    ok = ok && r.outside == 0 && r.bialgebras > 0;
    detail += std::string(detail.empty() ? "" : "; ") + name + ": " + str(r.bialgebras) + " of " + str(r.points) +
              " grid duals valid (" + str(r.mixed_zero) + " pass the linear identity), " + str(r.outside) +
              " outside the family";
  }
  report("AC5 solver completeness on the grid", ok, detail);
}

// ---------------------------------------------------------------- 6

void ac6() {
  Report all;
  for (auto& r : cat().solutions) {
    auto rep = verify_solutions(cat(), r.id);
    all.records.insert(all.records.end(), rep.records.begin(), rep.records.end());
  }
  size_t wit = 0, wit_ok = 0, fd = 0, fd_ok = 0, fc = 0, fc_ok = 0;
  std::string c_detail;
  for (auto& c : all.records) {
    if (c.check == "isomorphism") {
      ++wit;
      // "N points onto ..."
      wit_ok += c.status == "pass" && std::stoi(c.detail) >= 3;
    } else if (c.check.rfind("forced (", 0) == 0) {
      int row = c.check[8] - '0', col = c.check[10] - '0';
      // row/col 1-based; the first row is the boson in every witness here
      bool dblock = row > 1 && col == 1;
      if (dblock) {
        ++fd;
        fd_ok += c.status == "pass";
      } else {
        ++fc;
        fc_ok += c.status == "pass";
        if (c.status != "pass") c_detail += " " + c.entry + " c" + str(row) + str(col);
      }
    }
  }
  report("AC6.witnesses isomorphism matrices of the dual solution records", wit == 13 && wit_ok == wit,
         str(wit_ok) + "/" + str(wit) + " witnesses verified at >=3 sample points each");
  report("AC6.forced-D stated zeros in the imaginary block", fd > 0 && fd_ok == fd,
         str(fd_ok) + "/" + str(fd) + " forced by is_transformation_matrix");
  report("AC6.forced-C stated zeros in the real off-diagonal block", fc_ok == fc,
         str(fc_ok) + "/" + str(fc) + " forced;" + (c_detail.empty() ? "" : c_detail + ":") +
             " a real nonzero value is admitted and still gives an isomorphism");
}

// ---------------------------------------------------------------- 7

const AutFamily& aut(const std::string& name) { return cat().automorphisms_of(name)->family; }

void ac7() {
  auto C4s = cat().algebra("C4");
  auto C4 = *as_numeric(C4s);
  auto A2A1 = *as_numeric(cat().algebra("A11_2A_1"));
  GradedDims d12(1, 2);
  bool ok = true;
  std::vector<std::string> notes;

  // solve_duals gives the three-parameter family; C_1 carries each point with beta != 0 onto (A11+2A)^1
  auto fam = solve_duals(C4);
  ok = ok && fam.nullity() == 3 && fam.quad_constraints.empty();
  size_t iso_points = 0;
  for (auto [c22, c33, beta, gamma] : {std::tuple{Q(1), Q(1), Q(1), Q(1, 2)}, std::tuple{Q(-2), Q(1, 2), Q(-1), Q(3)},
                                       std::tuple{Q(3), Q(2), Q(1, 3), Q(-1)}}) {
    GScalar c23 = -c22 * gamma / beta;
    GScalar alpha = (c23 * c23 + c33 * c33) / (c22 * c22) * beta;
    auto d = family_specialize(fam, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}});
    auto C1 = SM(d12, {c33 * c33 * beta, 0, 0, 0, c22, c23, 0, 0, c33});
    iso_points += verify_isomorphism(dual_algebra(d), A2A1, C1).ok;
  }
  ok = ok && iso_points == 3;
  notes.push_back("C_1 verified at " + str(iso_points) + "/3 points");

  // witnesses B2 (b' = 1) and B3 (b' = -1) carry the reference dual onto the two branches
  auto ref = as_dual(A2A1);
  auto entry_k = load_entry(cat(), "(C4, (A11+2A)^1_{k,0,1})");
  auto entry_s = load_entry(cat(), "(C4, (A11+2A)^1_{s,0,-1})");
  size_t branch_ok = 0, inequiv = 0, equiv = 0, samples = 0;
  for (auto [r, b32, b33] : {std::tuple{Q(1), Q(1), Q(2)}, std::tuple{Q(2), Q(-1), Q(1, 2)},
                             std::tuple{Q(1, 3), Q(3), Q(-1)}, std::tuple{Q(-3, 2), Q(1), Q(1)}}) {
    ++samples;
    GScalar n2 = b32 * b32 + b33 * b33;
    auto B2 = SM(d12, {n2, 0, 0, 0, -r * b33, r * b32, 0, b32, b33});
    auto B3 = SM(d12, {-n2, 0, 0, 0, -r * b33, r * b32, 0, b32, b33});
    auto dk = as_dual(transport(dual_algebra(ref), B2));
    auto ds = as_dual(transport(dual_algebra(ref), B3));
    GScalar k = r * r, s = -r * r;
    bool branches = dk == specialize(*entry_k.dual, {{"k", k}}) && ds == specialize(*entry_s.dual, {{"s", s}}) &&
                    is_bialgebra(C4, dk) && is_bialgebra(C4, ds) && family_contains(fam, lift(dk)) &&
                    family_contains(fam, lift(ds));
    branch_ok += branches;
    inequiv += !bialgebra_equivalent(C4, dk, ds, B2, B3, aut("C4")).equivalent;
    // same-branch rescaling by an automorphism A: the dual moves by transform_dual, the witness to A^-st B2
    auto A = aut("C4").at({{"c", r + 1}, {"d", b32}});
    auto dk2 = transform_dual(dk, A, &C4);
    auto W = superinverse(supertranspose(A)) * B2;
    bool moved = dk2 == as_dual(transport(dual_algebra(ref), W));
    auto res = bialgebra_equivalent(C4, dk, dk2, B2, W, aut("C4"));
    equiv += moved && res.equivalent;
  }
  ok = ok && branch_ok == samples && inequiv == samples && equiv == samples && samples >= 3;
  notes.push_back("B2 gives k = r^2 > 0 and B3 gives s = -r^2 < 0 at " + str(branch_ok) + "/" + str(samples) +
                  " samples");
  notes.push_back("B2/B3 inequivalent " + str(inequiv) + "/" + str(samples));
  notes.push_back("same-branch rescalings equivalent " + str(equiv) + "/" + str(samples));
  std::string detail;
  for (auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
  report("AC7 worked example end to end", ok, detail);
}

// ---------------------------------------------------------------- 8

enum class Pattern { Full, LowerTriangular, UpperTriangular };

SuperMatrix random_transformation(std::mt19937& rng, GradedDims d, Pattern pat) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  while (true) {
    MatQ m(d.size(), d.size());
    for (int r = 0; r < d.size(); ++r)
      for (int c = 0; c < d.size(); ++c) {
        bool cblock = d.parity(r) == 0 && d.parity(c) == 1;
        bool dblock = d.parity(r) == 1 && d.parity(c) == 0;
        GScalar v = Q(num(rng), den(rng));
        if ((cblock && pat == Pattern::LowerTriangular) || (dblock && pat == Pattern::UpperTriangular)) v = 0;
        m(r, c) = dblock ? v * GScalar::i() : v;
      }
    SuperMatrix M(d, m);
    // both complements defined, so both formulas apply
    if (det(M.A()).is_zero() || det(M.B()).is_zero()) continue;
    if (!is_transformation_matrix(M)) continue;
    return M;
  }
}

void ac8() {
  std::mt19937 rng(8);
  const std::vector<GradedDims> all{GradedDims(1, 1), GradedDims(2, 1), GradedDims(1, 2)};
  struct Count {
    size_t mult = 0, agree = 0, inv = 0, st4 = 0, n = 0;
  };
  auto run = [&](Pattern pat) {
    Count c;
    for (auto d : all)
      for (int t = 0; t < 100; ++t) {
        auto M = random_transformation(rng, d, pat), N = random_transformation(rng, d, pat);
        ++c.n;
        auto MN = M * N;
        try {
          c.mult += superdeterminant(MN) == superdeterminant(M) * superdeterminant(N);
        } catch (const SdetUndefined&) {
        }
        auto b = sdet_schur_B(M), a = sdet_schur_A(M);
        c.agree += a && b && *a == *b;
        auto blocks = superinverse_blocks(M);
        auto generic = inverse(M.mat);
        c.inv += blocks && generic && blocks->mat == *generic;
        bool block_diag = true;
        for (int r = 0; r < d.size(); ++r)
          for (int k = 0; k < d.size(); ++k)
            if (d.parity(r) != d.parity(k) && !M(r, k).is_zero()) block_diag = false;
        c.st4 += supertranspose(M, 4) == M && (block_diag || !(supertranspose(M, 2) == M));
      }
    return c;
  };
  auto full = run(Pattern::Full);
  auto lower = run(Pattern::LowerTriangular);
  auto upper = run(Pattern::UpperTriangular);
  auto frac = [](size_t k, size_t n) { return str(k) + "/" + str(n); };
  report("AC8.mult sdet multiplicative, full transformation pattern", full.mult == full.n,
         frac(full.mult, full.n) + " products exact");
  report("AC8.mult-triangular sdet multiplicative, C = 0 or D = 0",
         lower.mult == lower.n && upper.mult == upper.n,
         frac(lower.mult, lower.n) + " with C = 0, " + frac(upper.mult, upper.n) + " with D = 0");
  report("AC8.formulas the two sdet formulas agree, full pattern", full.agree == full.n,
         frac(full.agree, full.n) + " agree");
  report("AC8.formulas-triangular the two sdet formulas agree, C = 0 or D = 0",
         lower.agree == lower.n && upper.agree == upper.n,
         frac(lower.agree, lower.n) + " with C = 0, " + frac(upper.agree, upper.n) + " with D = 0");
  report("AC8.inverse block inverse equals generic elimination",
         full.inv == full.n && lower.inv == lower.n && upper.inv == upper.n,
         frac(full.inv + lower.inv + upper.inv, full.n + lower.n + upper.n) + " agree");
  report("AC8.st supertranspose has period 4",
         full.st4 == full.n && lower.st4 == lower.n && upper.st4 == upper.n,
         frac(full.st4 + lower.st4 + upper.st4, full.n + lower.n + upper.n) +
             " with st^4 = 1 (and st^2 != 1 off the block diagonal)");
}

// ---------------------------------------------------------------- 9

std::optional<ParseError> parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  return std::nullopt;
}

void ac9() {
  auto printed_algebras = print_algebra_file(cat().algebras);
  auto printed_manifest = print_manifest(cat());
  auto again = Catalog::parse(printed_algebras, printed_manifest);
  bool same = print_algebra_file(again.algebras) == printed_algebras && print_manifest(again) == printed_manifest &&
              again.entries.size() == cat().entries.size() && again.solutions.size() == cat().solutions.size() &&
              again.automorphisms.size() == cat().automorphisms.size();
  for (size_t i = 0; same && i < again.entries.size(); ++i)
    same = again.entries[i].id == cat().entries[i].id && *again.entries[i].dual == *cat().entries[i].dual &&
           again.entries[i].effective_params() == cat().entries[i].effective_params();
  for (size_t i = 0; same && i < cat().algebras.algebras.size(); ++i)
    same = same_definition(again.algebras.algebras[i], cat().algebras.algebras[i]);

  // grading violations: (statement, expected column of the statement)
  struct Case {
    std::string text;
    int line, col;
  };
  const std::vector<Case> cases{
      {"algebra G {\n  bosons: X1;\n  fermions: X2;\n  [X1,X2] = X1;\n}\n", 4, 3},
      {"algebra G {\n  bosons: X1;\n  fermions: X2 X3;\n  {X2,X3} = X2;\n}\n", 4, 3},
      {"algebra G {\n  bosons: X1 X2;\n  fermions: X3;\n  [X1,X2] = X3;\n}\n", 4, 3},
      {"algebra G { bosons: X1; fermions: X2 X3; [X1,X2] = X2; [X1,X3] = X1 + X3; }", 1, 56},
  };
  size_t located = 0;
  for (auto& c : cases) {
    auto e = parse_error([&] { parse_algebra(c.text, "g.lsb"); });
    located += e && e->kind == ParseError::Kind::Semantic && e->pos.line == c.line && e->pos.col == c.col &&
               std::string(e->what()).find("g.lsb:" + str(c.line) + ":" + str(c.col)) == 0 &&
               e->message.find("grading") != std::string::npos;
  }
  auto B = cat().algebra("B");
  auto ed = parse_error([&] { parse_dual_spec("{X2,X2} = i*X1;\n[X1,X2] = X1;", B, {}, "d.lsb"); });
  located += ed && ed->pos.line == 2 && ed->pos.col == 1 && ed->message.find("grading") != std::string::npos;
  auto em = parse_error([&] {
    Catalog::parse(printed_algebras, "entry \"x\" {\n  table 4;\n  primal B;\n  dual \"d\" { {X2,X2} = i*X2; }\n}\n");
  });
  located += em && em->pos.line == 4 && em->source == "manifest.lsb";
  size_t expected = cases.size() + 2;
  report("AC9 parser round trip and located diagnostics", same && located == expected,
         std::string("catalog round trip ") + (same ? "identical" : "DIFFERS") + " (" + str(cat().algebras.algebras.size()) +
             " algebras, " + str(cat().entries.size()) + " entries); " + str(located) + "/" + str(expected) +
             " grading violations rejected at the right position");
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::set<std::string>> expect_red;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-red" && i + 1 < argc) {
      expect_red.emplace();
      std::stringstream ss(argv[++i]);
      for (std::string id; std::getline(ss, id, ',');) expect_red->insert(id);
    } else {
      std::cerr << "usage: acceptance [--expect-red ID,ID,...]\n";
      return 2;
    }
  }
  for (auto f : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9}) {
    try {
      f();
    } catch (const std::exception& e) {
      report("AC? exception", false, e.what());
    }
  }
  std::set<std::string> red;
  for (auto& l : lines)
    if (!l.ok) red.insert(l.id.substr(0, l.id.find(' ')));
  std::cout << lines.size() - red.size() << "/" << lines.size() << " lines green" << std::endl;
  if (!expect_red) return red.empty() ? 0 : 1;
  if (red == *expect_red) {
    std::cout << "red lines match the documented set" << std::endl;
    return 0;
  }
  for (auto& id : red)
    if (!expect_red->count(id)) std::cout << "unexpected red: " << id << std::endl;
  for (auto& id : *expect_red)
    if (!red.count(id)) std::cout << "expected red but green: " << id << std::endl;
  return 1;
}
