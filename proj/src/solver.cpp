#include "lsb/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lsb {

std::string Unknown::label() const {
  return "ft" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k + 1);
}

std::vector<Unknown> enumerate_unknowns(GradedDims dims) {
  std::vector<Unknown> out;
  const int N = dims.size();
  for (int k = 0; k < N; ++k) {
    const int pk = dims.parity(k);
    if (pk == 0)
      for (int i = dims.m; i < N; ++i) out.push_back({i, i, k, true});
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        const int pi = dims.parity(i), pj = dims.parity(j);
        if (((pi + pj) & 1) != pk) continue;
        out.push_back({i, j, k, pi == 1 && pj == 1});
      }
  }
  return out;
}

SymbolicDual dual_from_coords(GradedDims dims, const std::vector<Unknown>& unknowns, const VecP& coords) {
  SymbolicDual d("family", dims);
  for (size_t u = 0; u < unknowns.size(); ++u) {
    if (coords(u).is_zero()) continue;
    auto& x = unknowns[u];
    d.add_cobracket(x.i, x.j, x.k, x.imaginary ? coords(u) * MultiPoly(GScalar::i()) : coords(u));
  }
  return d;
}

std::optional<VecP> coords_of(const SymbolicDual& d, const std::vector<Unknown>& unknowns) {
  if (!validate_dual(d).ok()) return std::nullopt;
  VecP c(unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    auto& x = unknowns[u];
    const MultiPoly& v = d.ft(x.i, x.j, x.k);
    c(u) = x.imaginary ? v.im() : v.re();
  }
  // every nonzero component must be accounted for
  if (!(dual_from_coords(d.dims(), unknowns, c) == d)) return std::nullopt;
  return c;
}

MatP msj_linear_system(const SymbolicAlgebra& g) {
  auto unknowns = enumerate_unknowns(g.dims());
  const int N = g.size();
  const int comps = N * N * N * N;
  MatP A = MatP::Constant(2 * comps, unknowns.size(), MultiPoly());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    VecP e = VecP::Constant(unknowns.size(), MultiPoly());
    e(u) = MultiPoly(1);
    auto r = mixed_jacobi_residual(g, dual_from_coords(g.dims(), unknowns, e));
    for (auto& ent : r.nonzero) {
      auto [i, j, k, l] = ent.index;
      const int row = ((i * N + j) * N + k) * N + l;
      A(2 * row, u) = ent.value.re();
      A(2 * row + 1, u) = ent.value.im();
    }
  }
  std::vector<int> keep;
  for (int r = 0; r < A.rows(); ++r) {
    bool nz = false;
    for (int c = 0; c < A.cols(); ++c) nz |= !A(r, c).is_zero();
    if (nz) keep.push_back(r);
  }
  MatP out(keep.size(), A.cols());
  for (size_t r = 0; r < keep.size(); ++r) out.row(r) = A.row(keep[r]);
  return out;
}

MatP msj_linear_system(const LieSuperAlgebra& g) { return msj_linear_system(lift(g)); }

std::vector<std::string> parameter_names(int count, const std::vector<std::string>& avoid) {
  static const char* base[] = {"alpha", "beta", "gamma", "delta", "eta", "lambda", "mu", "nu", "rho", "sigma", "tau"};
  std::vector<std::string> out;
  for (int n = 0; static_cast<int>(out.size()) < count; ++n) {
    std::string name = n < 11 ? base[n] : "t" + std::to_string(n - 10);
    if (std::find(avoid.begin(), avoid.end(), name) == avoid.end()) out.push_back(name);
  }
  return out;
}

// ---- linear factorization ----

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return mpq_class(sqrt(n), sqrt(d));
}

// R with R^2 = q, R an affine linear form over Q
std::optional<MultiPoly> sqrt_linear(const MultiPoly& q) {
  if (q.is_zero()) return MultiPoly();
  if (q.total_degree() > 2) return std::nullopt;
  for (auto& [m, c] : q.terms())
    if (!c.is_real()) return std::nullopt;
  auto vars = q.ordered_variables();
  auto sq = [&](const std::string& v) { return q.coeff(v, 2).constant().re(); };
  std::optional<std::string> lead;
  mpq_class lead_root;
  for (auto& v : vars)
    if (sgn(sq(v)) != 0) {
      auto r = rational_sqrt(sq(v));
      if (!r) return std::nullopt;
      lead = v;
      lead_root = *r;
      break;
    }
  MultiPoly R;
  if (!lead) {
    if (!q.is_constant()) return std::nullopt;
    auto r = rational_sqrt(q.constant().re());
    if (!r) return std::nullopt;
    R = MultiPoly(GScalar(*r));
  } else {
    R = MultiPoly(GScalar(lead_root)) * MultiPoly::var(*lead);
    MultiPoly cross = q.coeff(*lead, 1);  // 2 r_lead * (rest of R)
    R += cross / GScalar(2 * lead_root);
  }
  if (R * R != q) return std::nullopt;
  return R;
}

void push_unique(std::vector<MultiPoly>& v, MultiPoly p) {
  p = monic(p);
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(std::move(p));
}

bool factor_into(const MultiPoly& q, std::vector<MultiPoly>& out) {
  if (q.is_constant()) return !q.is_zero();
  if (q.total_degree() == 1) {
    push_unique(out, q);
    return true;
  }
  Monomial content = monomial_content(q);
  if (!content.empty()) {
    for (auto& [v, e] : content) push_unique(out, MultiPoly::var(v));
    return factor_into(strip_monomial_content(q), out);
  }
  for (auto& x : q.ordered_variables()) {
    const int d = q.degree(x);
    const MultiPoly X = MultiPoly::var(x);
    if (d == 2) {
      MultiPoly a = q.coeff(x, 2), L1 = q.coeff(x, 1), L0 = q.coeff(x, 0);
      if (!a.is_constant()) continue;
      auto R = sqrt_linear(L1 * L1 - MultiPoly(4) * a * L0);
      if (!R) continue;
      GScalar two_a = GScalar(2) * a.constant();
      MultiPoly F1 = X - (-L1 + *R) / two_a, F2 = X - (-L1 - *R) / two_a;
      if (a * F1 * F2 != q) continue;
      push_unique(out, F1);
      push_unique(out, F2);
      return true;
    }
    if (d == 1) {
      MultiPoly L1 = q.coeff(x, 1), L0 = q.coeff(x, 0);
      if (L1.is_constant()) continue;
      auto rest = exact_div(L0, L1);
      if (!rest) continue;
      return factor_into(L1, out) && factor_into(X + *rest, out);
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<MultiPoly>> linear_factors(const MultiPoly& p) {
  if (p.is_zero()) return std::nullopt;
  std::vector<MultiPoly> out;
  for (auto& c : p.terms())
    if (!c.second.is_real()) return std::nullopt;
  if (!factor_into(p, out)) return std::nullopt;
  return out;
}

// ---- branch splitting ----

std::string Branch::str() const {
  std::string s;
  for (auto& [v, e] : solution) s += (s.empty() ? "" : ", ") + v + " = " + e.str();
  if (s.empty()) s = "generic";
  if (is_variety()) {
    s += "; variety:";
    for (auto& r : residual) s += " " + r.str() + " = 0;";
  }
  return s;
}

namespace {

using Sol = std::map<std::string, MultiPoly>;

void branch_rec(std::vector<MultiPoly> pending, Sol sol, const std::vector<std::string>& priority,
                std::vector<Branch>& out) {
  std::vector<MultiPoly> live;
  for (auto& c : pending) {
    MultiPoly s = c.substitute(sol);
    if (s.is_zero()) continue;
    if (s.is_constant()) return;  // inconsistent
    live.push_back(monic(s));
  }
  if (live.empty()) {
    out.push_back({sol, {}});
    return;
  }
  auto factors = linear_factors(live.front());
  if (!factors) {
    out.push_back({sol, live});
    return;
  }
  std::vector<MultiPoly> rest(live.begin() + 1, live.end());
  for (auto& F : *factors) {
    auto vars = F.variables();
    std::string v = *vars.begin();
    for (auto& cand : priority)
      if (vars.count(cand)) {
        v = cand;
        break;
      }
    GScalar c = F.coeff(v, 1).constant();
    MultiPoly expr = -(F - MultiPoly(c) * MultiPoly::var(v)) / c;
    Sol next;
    for (auto& [w, e] : sol) next[w] = e.substitute(std::map<std::string, MultiPoly>{{v, expr}});
    next[v] = expr;
    branch_rec(rest, next, priority, out);
  }
}

bool subset_of(const Branch& a, const Branch& b) {
  if (a.is_variety() || b.is_variety()) return false;
  for (auto& [v, e] : b.solution)
    if (!(MultiPoly::var(v) - e).substitute(a.solution).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Branch> split_branches(const std::vector<MultiPoly>& constraints,
                                   const std::vector<std::string>& priority) {
  std::vector<Branch> raw;
  branch_rec(constraints, {}, priority, raw);
  std::vector<Branch> out;
  for (size_t a = 0; a < raw.size(); ++a) {
    bool drop = false;
    for (size_t b = 0; b < raw.size() && !drop; ++b) {
      if (a == b) continue;
      bool ab = subset_of(raw[a], raw[b]), ba = subset_of(raw[b], raw[a]);
      if (ab && (!ba || b < a)) drop = true;
    }
    if (raw[a].is_variety())
      for (auto& o : out)
        if (o.solution == raw[a].solution && o.residual == raw[a].residual) drop = true;
    if (!drop) out.push_back(raw[a]);
  }
  return out;
}

// ---- families ----

SymbolicDual DualSolutionFamily::basis_dual(int b) const {
  auto d = dual_from_coords(dims, unknowns, basis.at(b));
  d.set_name(algebra + " basis " + std::to_string(b + 1));
  return d;
}

SymbolicDual DualSolutionFamily::general() const {
  VecP c = VecP::Constant(unknowns.size(), MultiPoly());
  for (size_t b = 0; b < basis.size(); ++b) c += MultiPoly::var(free_params[b]) * basis[b];
  auto d = dual_from_coords(dims, unknowns, c);
  d.set_name(algebra + " dual family");
  return d;
}

namespace {

std::string statements(const SymbolicDual& d, const std::string& indent) {
  std::string s;
  auto st = bracket_statements(dual_algebra(d));
  if (st.empty()) return indent + "(zero)\n";
  for (auto& x : st) s += indent + x + "\n";
  return s;
}

}  // namespace

std::string DualSolutionFamily::str() const {
  std::ostringstream os;
  os << "family " << algebra << " dims " << dims.str() << "\n";
  os << "  unknowns:";
  for (auto& u : unknowns) os << " " << u.label() << (u.imaginary ? "(i)" : "");
  os << "\n  nullity: " << nullity() << "\n";
  os << "  free parameters:";
  for (auto& p : free_params) os << " " << p;
  if (free_params.empty()) os << " none";
  os << "\n  general element:\n" << statements(general(), "    ");
  os << "  quadratic constraints:";
  if (quad_constraints.empty()) os << " none";
  os << "\n";
  for (auto& q : quad_constraints) os << "    " << q.str() << " = 0\n";
  if (!quad_constraints.empty()) {
    os << "  branches:\n";
    for (auto& b : branches) os << "    " << b.str() << "\n";
  }
  for (auto& s : special) {
    os << "  special " << s.param << " = " << s.value.get_str() << " (" << s.reason << "):\n";
    std::string inner = s.family->str();
    std::istringstream is(inner);
    for (std::string line; std::getline(is, line);) os << "    " << line << "\n";
  }
  return os.str();
}

DualSolutionFamily solve_duals(const SymbolicAlgebra& g) {
  DualSolutionFamily fam;
  fam.algebra = g.name();
  fam.dims = g.dims();
  fam.unknowns = enumerate_unknowns(g.dims());
  std::set<std::string> pvars;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      for (int k = 0; k < g.size(); ++k)
        for (auto& v : g.f(i, j, k).variables()) pvars.insert(v);
  fam.primal_params.assign(pvars.begin(), pvars.end());

  Elimination E;
  if (!fam.unknowns.empty()) {
    E = fraction_free_gauss_jordan(msj_linear_system(g));
    fam.basis = nullspace_basis(E);
    fam.basis_pivots = free_columns(E);
  }
  fam.free_params = parameter_names(fam.nullity(), fam.primal_params);

  std::set<MultiPoly> quad;
  for (auto& e : dual_jacobi_residual(fam.general()).nonzero)
    for (const MultiPoly& part : {e.value.re(), e.value.im()})
      if (!part.is_zero()) quad.insert(monic(part));
  fam.quad_constraints.assign(quad.begin(), quad.end());

  std::vector<std::string> priority = fam.free_params;
  priority.insert(priority.end(), fam.primal_params.begin(), fam.primal_params.end());
  fam.branches = quad.empty() ? std::vector<Branch>{Branch{}} : split_branches(fam.quad_constraints, priority);

  if (fam.primal_params.size() == 1) {
    const std::string p = fam.primal_params[0];
    const ParamDecl* decl = find_param(g.params, p);
    std::set<mpq_class> candidates;
    std::map<mpq_class, std::string> reason;
    for (auto& piv : E.pivots)
      if (!piv.is_constant())
        for (auto& r : rational_roots(piv, p))
          if (!decl || decl->domain.contains(r)) {
            candidates.insert(r);
            reason.emplace(r, "pivot vanishes");
          }
    for (auto& b : fam.branches) {
      auto it = b.solution.find(p);
      if (it != b.solution.end() && it->second.is_constant() && it->second.constant().is_real()) {
        mpq_class r = it->second.constant().re();
        if (!decl || decl->domain.contains(r)) {
          candidates.insert(r);
          reason.emplace(r, "constraint locus");
        }
      }
    }
    for (auto& r : candidates) {
      SymbolicAlgebra g0(g.name() + "[" + p + "=" + r.get_str() + "]", g.dims(),
                         g.tensor().map([&](const MultiPoly& x) { return x.substitute(Assignment{{p, GScalar(r)}}); }));
      g0.labels = g.labels;
      auto f0 = std::make_shared<DualSolutionFamily>(solve_duals(g0));
      std::string why = reason[r];
      if (why == "pivot vanishes") {
        if (f0->nullity() > fam.nullity()) {
          why = "rank drop";
        } else {
          MatQ at(fam.unknowns.size(), fam.nullity());
          for (int b = 0; b < fam.nullity(); ++b)
            for (size_t u = 0; u < fam.unknowns.size(); ++u) at(u, b) = fam.basis[b](u).eval({{p, GScalar(r)}});
          if (rank(at) == fam.nullity()) continue;  // nothing changes here
          why = "basis degenerates";
        }
      }
      fam.special.push_back({p, r, why, f0});
    }
  }
  return fam;
}

DualSolutionFamily solve_duals(const LieSuperAlgebra& g) { return solve_duals(lift(g)); }

DualStructure family_specialize(const DualSolutionFamily& fam, const Assignment& at) {
  for (auto& q : fam.quad_constraints)
    if (!q.eval(at).is_zero())
      throw ConstraintViolation("assignment violates constraint " + q.str() + " = 0");
  return specialize(fam.general(), at);
}

std::optional<std::vector<MultiPoly>> family_contains(const DualSolutionFamily& fam, const SymbolicDual& d) {
  if (!(d.dims() == fam.dims)) return std::nullopt;
  auto c = coords_of(d, fam.unknowns);
  if (!c) return std::nullopt;
  std::vector<MultiPoly> coef;
  VecP acc = VecP::Constant(fam.unknowns.size(), MultiPoly());
  for (int b = 0; b < fam.nullity(); ++b) {
    const MultiPoly& pivot = fam.basis[b](fam.basis_pivots[b]);
    std::optional<MultiPoly> cb;
    if (auto k = pivot.as_constant())
      cb = (*c)(fam.basis_pivots[b]) / *k;
    else
      cb = exact_div((*c)(fam.basis_pivots[b]), pivot);
    if (!cb) return std::nullopt;
    coef.push_back(*cb);
    acc += *cb * fam.basis[b];
  }
  if (acc != *c) return std::nullopt;
  std::map<std::string, MultiPoly> sub;
  for (int b = 0; b < fam.nullity(); ++b) sub[fam.free_params[b]] = coef[b];
  for (auto& q : fam.quad_constraints)
    if (!q.substitute(sub).is_zero()) return std::nullopt;
  return coef;
}

}  // namespace lsb
