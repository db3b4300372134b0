#include "lsb/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace lsb {

LieSuperAlgebra transport(const LieSuperAlgebra& g, const SuperMatrix& M) {
  if (!(g.dims() == M.dims)) throw std::invalid_argument("transport: dims mismatch");
  auto inv = inverse(M.mat);
  if (!inv) throw InvalidTransformation("transport: singular matrix");
  const int N = g.size();
  // t(i,j,c) = M_ia M_jb f^c_ab, then contract c with M^-1
  Tensor3<GScalar> t(N), out(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        const GScalar& f = g.f(a, b, c);
        if (f.is_zero()) continue;
        for (int i = 0; i < N; ++i) {
          if (M(i, a).is_zero()) continue;
          GScalar mf = M(i, a) * f;
          for (int j = 0; j < N; ++j)
            if (!M(j, b).is_zero()) t(i, j, c) += mf * M(j, b);
        }
      }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int c = 0; c < N; ++c) {
        if (t(i, j, c).is_zero()) continue;
        for (int k = 0; k < N; ++k) out(i, j, k) += t(i, j, c) * (*inv)(c, k);
      }
  LieSuperAlgebra r(g.name(), g.dims(), std::move(out));
  r.labels = g.labels;
  return r;
}

namespace {

MorphismCheck compare(const LieSuperAlgebra& got, const LieSuperAlgebra& want) {
  MorphismCheck c;
  const int N = got.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        GScalar d = got.f(i, j, k) - want.f(i, j, k);
        if (!d.is_zero()) c.residual.nonzero.push_back({{i, j, k, 0}, d});
      }
  c.ok = c.residual.zero();
  return c;
}

void require_transformation(const SuperMatrix& M, const char* what) {
  auto tc = is_transformation_matrix(M);
  if (!tc.ok) {
    std::string msg = std::string(what) + ": invalid transformation matrix";
    for (auto& d : tc.diagnostics) msg += "; " + d;
    throw InvalidTransformation(msg);
  }
}

}  // namespace

MorphismCheck verify_automorphism(const LieSuperAlgebra& g, const SuperMatrix& A) {
  if (!(g.dims() == A.dims)) throw std::invalid_argument("verify_automorphism: dims mismatch");
  require_transformation(A, "verify_automorphism");
  return compare(transport(g, A), g);
}

MorphismCheck verify_isomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const SuperMatrix& C) {
  if (!(src.dims() == dst.dims()) || !(src.dims() == C.dims))
    throw std::invalid_argument("verify_isomorphism: dims mismatch");
  require_transformation(C, "verify_isomorphism");
  return compare(transport(src, C), dst);
}

MorphismCheck verify_isomorphism(const DualStructure& src, const DualStructure& dst, const SuperMatrix& C) {
  return verify_isomorphism(dual_algebra(src), dual_algebra(dst), C);
}

DualStructure transform_dual(const DualStructure& d, const SuperMatrix& A, const LieSuperAlgebra* primal) {
  if (primal && !verify_automorphism(*primal, A).ok)
    throw InvalidTransformation("transform_dual: matrix is not an automorphism of " + primal->name());
  SuperMatrix Ainv_st;
  try {
    Ainv_st = superinverse(supertranspose(A));
  } catch (const SingularMatrix&) {
    throw InvalidTransformation("transform_dual: singular matrix");
  }
  auto out = as_dual(transport(dual_algebra(d), Ainv_st));
  out.params = d.params;
  return out;
}

// ---- automorphism families ----

SuperMatrix AutFamily::at(const Assignment& a) const { return SuperMatrix(dims, evaluate(shape, a)); }

bool AutFamily::admissible(const Assignment& a) const {
  for (auto& p : params) {
    auto it = a.find(p);
    if (it == a.end() || !it->second.is_real()) return false;
  }
  for (auto& q : nonzero)
    if (q.eval(a).is_zero()) return false;
  return true;
}

std::optional<std::pair<int, int>> AutFamily::pivot(const std::string& param) const {
  const MultiPoly v = MultiPoly::var(param);
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.cols(); ++c)
      if (shape(r, c) == v) return std::make_pair(r, c);
  return std::nullopt;
}

std::optional<Assignment> aut_membership(const AutFamily& fam, const SuperMatrix& M) {
  if (!(fam.dims == M.dims)) return std::nullopt;
  Assignment a;
  for (auto& p : fam.params) {
    auto piv = fam.pivot(p);
    if (!piv) return std::nullopt;
    a[p] = M(piv->first, piv->second);
  }
  if (!fam.admissible(a)) return std::nullopt;
  if (fam.at(a).mat != M.mat) return std::nullopt;
  return a;
}

// ---- equivalence ----

EquivalenceResult bialgebra_equivalent(const LieSuperAlgebra& g, const DualStructure& d1, const DualStructure& d2,
                                       const SuperMatrix& B1, const SuperMatrix& B2, const AutFamily& fam) {
  if (!(d1.dims() == g.dims()) || !(d2.dims() == g.dims()) || !(fam.dims == g.dims()))
    throw std::invalid_argument("bialgebra_equivalent: dims mismatch");
  SuperMatrix B1inv, B2inv;
  try {
    B1inv = superinverse(B1);
    B2inv = superinverse(B2);
  } catch (const SingularMatrix&) {
    throw NonWitness("bialgebra_equivalent: singular witness");
  }
  // both witnesses must come from the same reference dual
  auto ref1 = transport(dual_algebra(d1), B1inv);
  auto ref2 = transport(dual_algebra(d2), B2inv);
  if (!(ref1 == ref2)) throw NonWitness("bialgebra_equivalent: B1 and B2 do not share a reference dual");
  for (auto* B : {&B1, &B2}) {
    auto tc = is_transformation_matrix(*B);
    if (!tc.ok) throw NonWitness("bialgebra_equivalent: witness is not a transformation matrix");
  }

  EquivalenceResult r;
  r.relation = B2 * B1inv;
  r.candidate = supertranspose(r.relation, 3);
  r.membership = aut_membership(fam, r.candidate);
  if (r.membership) {
    // a member that is not an automorphism means the shipped family is wrong
    auto chk = verify_automorphism(g, r.candidate);
    if (!chk.ok) throw std::logic_error("automorphism family member fails verify_automorphism");
    r.equivalent = true;
  }
  return r;
}

// ---- heuristic search ----

std::optional<SuperMatrix> search_isomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, int bound,
                                              long budget) {
  if (!(src.dims() == dst.dims())) return std::nullopt;
  std::vector<GScalar> values{GScalar(0)};
  for (int q = 1; q <= bound; ++q)
    for (int p = 1; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (int s : {1, -1}) values.push_back(GScalar(mpq_class(s * p, q)));
    }
  // order by height, then value, so simple matrices come first
  auto height = [](const GScalar& v) -> mpz_class {
    mpz_class n = abs(v.re().get_num()), q = v.re().get_den();
    return n > q ? n : q;
  };
  std::stable_sort(values.begin(), values.end(), [&](const GScalar& a, const GScalar& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });

  const GradedDims d = src.dims();
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < d.size(); ++r)
    for (int c = 0; c < d.size(); ++c)
      if (d.parity(r) == d.parity(c)) slots.push_back({r, c});

  const int V = static_cast<int>(values.size());
  const int S = static_cast<int>(slots.size());
  long tried = 0;
  for (int level = 0; level < V; ++level) {
    std::vector<int> idx(S, 0);
    while (true) {
      if (*std::max_element(idx.begin(), idx.end()) == level) {
        MatQ m = MatQ::Constant(d.size(), d.size(), GScalar(0));
        for (int s = 0; s < S; ++s) m(slots[s].first, slots[s].second) = values[idx[s]];
        if (!det(m).is_zero()) {
          if (++tried > budget) return std::nullopt;
          SuperMatrix C(d, m);
          if (transport(src, C) == dst) return C;
        }
      }
      int s = 0;
      while (s < S && idx[s] == level) idx[s++] = 0;
      if (s == S) break;
      ++idx[s];
    }
  }
  return std::nullopt;
}

}  // namespace lsb
