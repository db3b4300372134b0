#include "lsb/linsolve.hpp"

#include <algorithm>
#include <set>

namespace lsb {

namespace {

// constants first, then lower degree, then fewer terms
bool better_pivot(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.terms().size() < b.terms().size();
}

MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b) {
  if (auto c = b.as_constant()) return a / *c;
  auto q = exact_div(a, b);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *q;
}

}  // namespace

Elimination fraction_free_gauss_jordan(MatP m) {
  Elimination e;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  MultiPoly prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero() && (best < 0 || better_pivot(m(i, c), m(best, c)))) best = i;
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const MultiPoly piv = m(r, c);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const MultiPoly a = m(i, c);
      for (int j = 0; j < cols; ++j) {
        if (j == c) continue;
        MultiPoly t = piv * m(i, j) - a * m(r, j);
        m(i, j) = div_exact(t, prev);
      }
      m(i, c) = MultiPoly();
    }
    // earlier pivot rows scale up to the new pivot through the loop above; row r keeps piv
    e.pivot_cols.push_back(c);
    e.pivots.push_back(piv);
    prev = piv;
    ++r;
  }
  e.det = prev;
  e.reduced = std::move(m);
  return e;
}

std::vector<int> free_columns(const Elimination& e) {
  std::vector<int> out;
  std::set<int> piv(e.pivot_cols.begin(), e.pivot_cols.end());
  for (int c = 0; c < e.reduced.cols(); ++c)
    if (!piv.count(c)) out.push_back(c);
  return out;
}

VecP primitive_normalize(VecP v) {
  std::set<std::string> vars;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (auto& x : v(i).variables()) vars.insert(x);
  if (vars.size() == 1) {
    const std::string var = *vars.begin();
    MultiPoly g;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) g = g.is_zero() ? monic(v(i)) : gcd_univariate(g, v(i), var);
    if (!g.is_zero() && !g.is_constant())
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = *exact_div(v(i), g);
  }
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      GScalar lc = v(i).leading().second;
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) /= lc;
      break;
    }
  return v;
}

std::vector<VecP> nullspace_basis(const Elimination& e) {
  const int cols = static_cast<int>(e.reduced.cols());
  std::vector<VecP> out;
  for (int f : free_columns(e)) {
    VecP v = VecP::Constant(cols, MultiPoly());
    v(f) = e.det;
    for (int r = 0; r < e.rank(); ++r) v(e.pivot_cols[r]) = -e.reduced(r, f);
    out.push_back(primitive_normalize(std::move(v)));
  }
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  for (auto& v : p.variables())
    if (v != var) throw std::invalid_argument("rational_roots: stray variable " + v);
  const int deg = p.degree(var);
  std::vector<mpq_class> coeff(deg + 1);
  for (int k = 0; k <= deg; ++k) {
    GScalar c = p.coeff(var, k).constant();
    if (!c.is_real()) throw std::invalid_argument("rational_roots: complex coefficient");
    coeff[k] = c.re();
  }
  std::vector<mpq_class> roots;
  int low = 0;
  while (low <= deg && sgn(coeff[low]) == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low == deg) return roots;
  mpz_class l = 1;
  for (auto& c : coeff) l = lcm(l, c.get_den());
  std::vector<mpz_class> ic;
  for (auto& c : coeff) ic.push_back(mpz_class(c * l));
  auto eval = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (int k = deg; k >= 0; --k) acc = acc * x + ic[k];
    return acc;
  };
  std::set<mpq_class> found;
  for (auto& a : divisors(ic[low]))
    for (auto& b : divisors(ic[deg]))
      for (int s : {1, -1}) {
        mpq_class x(a * s, b);
        x.canonicalize();
        if (sgn(eval(x)) == 0) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace lsb
