#ifndef LSB_BIALGEBRA_HPP
#define LSB_BIALGEBRA_HPP

#include "lsb/superalgebra.hpp"
#include "lsb/supermatrix.hpp"

namespace lsb {

// Dual constants ft^{ij}_k, [Xt^i, Xt^j] = ft^{ij}_k Xt^k, over the primal's grading.
template <class S>
class BasicDual {
 public:
  BasicDual() = default;
  BasicDual(std::string name, GradedDims dims) : name_(std::move(name)), dims_(dims), ft_(dims.size()) {}
  BasicDual(std::string name, GradedDims dims, Tensor3<S> ft)
      : name_(std::move(name)), dims_(dims), ft_(std::move(ft)) {
    if (ft_.size() != dims_.size()) throw std::invalid_argument("tensor size does not match dims");
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const GradedDims& dims() const { return dims_; }
  int size() const { return dims_.size(); }

  const S& ft(int i, int j, int k) const { return ft_(i, j, k); }
  const Tensor3<S>& tensor() const { return ft_; }

  void add_cobracket(int i, int j, int k, const S& v) {
    BasicAlgebra<S> tmp("", dims_, std::move(ft_));
    tmp.add_bracket(i, j, k, v);
    ft_ = tmp.tensor();
  }
  void set_raw(int i, int j, int k, const S& v) { ft_(i, j, k) = v; }

  std::vector<ParamDecl> params;

  friend bool operator==(const BasicDual& a, const BasicDual& b) { return a.dims_ == b.dims_ && a.ft_ == b.ft_; }

 private:
  std::string name_;
  GradedDims dims_;
  Tensor3<S> ft_;
};

using DualStructure = BasicDual<GScalar>;
using SymbolicDual = BasicDual<MultiPoly>;

// The dual read as an algebra over the Xt basis.
template <class S>
BasicAlgebra<S> dual_algebra(const BasicDual<S>& d) {
  BasicAlgebra<S> g(d.name(), d.dims(), d.tensor());
  g.params = d.params;
  return g;
}

// An algebra's constants read as a dual structure.
template <class S>
BasicDual<S> as_dual(const BasicAlgebra<S>& g) {
  BasicDual<S> d(g.name(), g.dims(), g.tensor());
  d.params = g.params;
  return d;
}

DualStructure specialize(const SymbolicDual& d, const Assignment& at);
SymbolicDual lift(const DualStructure& d);
std::optional<DualStructure> as_numeric(const SymbolicDual& d);

template <class S>
ValidationReport validate_dual(const BasicDual<S>& d) {
  return validate_structure(dual_algebra(d));
}

template <class S>
Residual<S> dual_jacobi_residual(const BasicDual<S>& d) {
  return super_jacobi_residual(dual_algebra(d));
}

// (i,j,k,l): sum_m f^m_jk ft^il_m - f^i_mk ft^ml_j - f^l_jm ft^im_k
//            - (-1)^{jl} f^i_jm ft^ml_k - (-1)^{ik} f^l_mk ft^im_j
template <class S>
Residual<S> mixed_jacobi_residual(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  if (!(g.dims() == d.dims())) throw std::invalid_argument("mixed residual: dims mismatch");
  Residual<S> r;
  const int N = g.size();
  auto p = [&](int x) { return g.parity(x); };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          const S sjl(sgn_pow(p(j) * p(l))), sik(sgn_pow(p(i) * p(k)));
          S acc(0);
          for (int m = 0; m < N; ++m) {
            acc += g.f(j, k, m) * d.ft(i, l, m);
            acc -= g.f(m, k, i) * d.ft(m, l, j);
            acc -= g.f(j, m, l) * d.ft(i, m, k);
            acc -= sjl * g.f(j, m, i) * d.ft(m, l, k);
            acc -= sik * g.f(m, k, l) * d.ft(i, m, j);
          }
          if (!is_zero(acc)) r.nonzero.push_back({{i, j, k, l}, std::move(acc)});
        }
  return r;
}

template <class S>
bool is_bialgebra(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  return super_jacobi_residual(g).zero() && dual_jacobi_residual(d).zero() && mixed_jacobi_residual(g, d).zero();
}

// Xt^i with entries (Xt^i)_jk = -ft^ij_k
template <class S>
std::vector<Mat<S>> dual_adjoint_matrices(const BasicDual<S>& d) {
  const int N = d.size();
  std::vector<Mat<S>> X(N, Mat<S>::Constant(N, N, S(0)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) X[i](j, k) = -d.ft(i, j, k);
  return X;
}

template <class S>
AdjointSet<S> adjoint_rep(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  return {adjoint_matrices(g), dual_adjoint_matrices(d)};
}

// Matrix form of the dual super Jacobi identity: for all i, j
//   sum_k (Xt^i)_jk Xt^k - Xt^j Xt^i + (-1)^{ij} Xt^i Xt^j = 0
// Returns the number of nonzero entries over all (i, j).
template <class S>
int dual_matrix_residual(const BasicDual<S>& d) {
  auto X = dual_adjoint_matrices(d);
  const int N = d.size();
  int bad = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Mat<S> acc = -(X[j] * X[i]) + S(psign(d.dims(), i, j)) * (X[i] * X[j]);
      for (int k = 0; k < N; ++k)
        if (!is_zero(X[i](j, k))) acc += X[i](j, k) * X[k];
      bad += count_nonzero(acc);
    }
  return bad;
}

// Matrix form of the mixed identity under the shipped supertranspose:
//   sum_l (Xt^i)_jl Y^l = -(-1)^j st(Xt^j) Y^i + Y^j Xt^i - (-1)^{ij} Y^i Xt^j
//                         + (-1)^{i+ij} st(Xt^i) Y^j
template <class S>
int mixed_matrix_residual(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  auto Y = adjoint_matrices(g);
  auto X = dual_adjoint_matrices(d);
  const int N = g.size();
  const GradedDims& dims = g.dims();
  std::vector<Mat<S>> Xst;
  for (auto& x : X) Xst.push_back(supertranspose(BasicSuperMatrix<S>(dims, x)).mat);
  int bad = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int pi = dims.parity(i), pj = dims.parity(j);
      Mat<S> acc = Mat<S>::Constant(N, N, S(0));
      for (int l = 0; l < N; ++l)
        if (!is_zero(X[i](j, l))) acc += X[i](j, l) * Y[l];
      acc += S(sgn_pow(pj)) * (Xst[j] * Y[i]);
      acc -= Y[j] * X[i];
      acc += S(sgn_pow(pi * pj)) * (Y[i] * X[j]);
      acc -= S(sgn_pow(pi + pi * pj)) * (Xst[i] * Y[j]);
      bad += count_nonzero(acc);
    }
  return bad;
}

struct CrosscheckReport {
  bool tensor_dual_zero, matrix_dual_zero, tensor_mixed_zero, matrix_mixed_zero;
  bool agree() const { return tensor_dual_zero == matrix_dual_zero && tensor_mixed_zero == matrix_mixed_zero; }
};

template <class S>
CrosscheckReport matrix_identity_crosscheck(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  return {dual_jacobi_residual(d).zero(), dual_matrix_residual(d) == 0, mixed_jacobi_residual(g, d).zero(),
          mixed_matrix_residual(g, d) == 0};
}

// delta(X_i)^{jk} = (-1)^{jk} ft^jk_i
template <class S>
Mat<S> cocommutator(const BasicDual<S>& d, int i) {
  const int N = d.size();
  Mat<S> out(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) out(j, k) = S(psign(d.dims(), j, k)) * d.ft(j, k, i);
  return out;
}

// One-cocycle condition on basis pairs:
//   delta([X_a, X_b]) = X_a . delta(X_b) - (-1)^{ab} X_b . delta(X_a)
// with x . (u (x) w) = [x,u] (x) w + (-1)^{|x||u|} u (x) [x,w]. Index (a, b, x, y).
template <class S>
Residual<S> one_cocycle_residual(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  const int N = g.size();
  const GradedDims& dims = g.dims();
  std::vector<Mat<S>> delta;
  for (int i = 0; i < N; ++i) delta.push_back(cocommutator(d, i));
  auto act = [&](int a, const Mat<S>& T) {
    Mat<S> R = Mat<S>::Constant(N, N, S(0));
    for (int u = 0; u < N; ++u)
      for (int w = 0; w < N; ++w) {
        if (is_zero(T(u, w))) continue;
        const S sign(psign(dims, a, u));
        for (int x = 0; x < N; ++x) {
          if (!is_zero(g.f(a, u, x))) R(x, w) += T(u, w) * g.f(a, u, x);
          if (!is_zero(g.f(a, w, x))) R(u, x) += sign * T(u, w) * g.f(a, w, x);
        }
      }
    return R;
  };
  Residual<S> r;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Mat<S> L = Mat<S>::Constant(N, N, S(0));
      for (int x = 0; x < N; ++x)
        if (!is_zero(g.f(a, b, x))) L += g.f(a, b, x) * delta[x];
      Mat<S> diff = L - act(a, delta[b]) + S(psign(dims, a, b)) * act(b, delta[a]);
      for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
          if (!is_zero(diff(x, y))) r.nonzero.push_back({{a, b, x, y}, diff(x, y)});
    }
  return r;
}

// Drinfel'd double in standard (bosons first) order:
//   X bosons, Xt bosons, X fermions, Xt fermions.
template <class S>
struct BasicDouble {
  BasicAlgebra<S> algebra;
  Mat<S> pairing;
  std::vector<int> pos_x, pos_xt;  // basis position of X_i and Xt^i
  bool inputs_valid = true;        // false: built from a pair failing the residuals
};

using DoubleAlgebra = BasicDouble<GScalar>;

template <class S>
BasicDouble<S> build_double(const BasicAlgebra<S>& g, const BasicDual<S>& d) {
  if (!(g.dims() == d.dims())) throw std::invalid_argument("double: dims mismatch");
  const GradedDims dims = g.dims();
  const int N = dims.size(), m = dims.m, n = dims.n;
  BasicDouble<S> D;
  D.pos_x.resize(N);
  D.pos_xt.resize(N);
  std::vector<std::string> labels(2 * N);
  for (int i = 0; i < N; ++i) {
    D.pos_x[i] = i < m ? i : 2 * m + (i - m);
    D.pos_xt[i] = i < m ? m + i : 2 * m + n + (i - m);
    labels[D.pos_x[i]] = g.label(i);
    labels[D.pos_xt[i]] = g.label(i) + "t";
  }
  GradedDims dd(2 * m, 2 * n);
  Tensor3<S> t(2 * N);
  auto X = [&](int i) { return D.pos_x[i]; };
  auto Xt = [&](int i) { return D.pos_xt[i]; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        t(X(i), X(j), X(k)) = g.f(i, j, k);
        t(Xt(i), Xt(j), Xt(k)) = d.ft(i, j, k);
        // [X_i, Xt^j] = (-1)^j ft^jk_i X_k + (-1)^i f^j_ki Xt^k
        S a = S(sgn_pow(dims.parity(j))) * d.ft(j, k, i);
        S b = S(sgn_pow(dims.parity(i))) * g.f(k, i, j);
        const S back(-psign(dims, i, j));
        t(X(i), Xt(j), X(k)) = a;
        t(X(i), Xt(j), Xt(k)) = b;
        t(Xt(j), X(i), X(k)) = back * a;
        t(Xt(j), X(i), Xt(k)) = back * b;
      }
  D.algebra = BasicAlgebra<S>(g.name() + "+" + d.name(), dd, std::move(t));
  D.algebra.labels = labels;
  D.pairing = Mat<S>::Constant(2 * N, 2 * N, S(0));
  for (int i = 0; i < N; ++i) {
    D.pairing(X(i), Xt(i)) = S(1);
    D.pairing(Xt(i), X(i)) = S(sgn_pow(dims.parity(i)));
  }
  D.inputs_valid = is_bialgebra(g, d);
  return D;
}

// <[a,b],c> - (-1)^{|b|} <a,[b,c]> over basis triples; index (a, b, c, 0).
template <class S>
Residual<S> pairing_ad_invariance(const BasicDouble<S>& D) {
  const auto& A = D.algebra;
  const int M = A.size();
  Residual<S> r;
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      for (int c = 0; c < M; ++c) {
        S lhs(0), rhs(0);
        for (int k = 0; k < M; ++k) {
          if (!is_zero(A.f(a, b, k)) && !is_zero(D.pairing(k, c))) lhs += A.f(a, b, k) * D.pairing(k, c);
          if (!is_zero(A.f(b, c, k)) && !is_zero(D.pairing(a, k))) rhs += A.f(b, c, k) * D.pairing(a, k);
        }
        S diff = lhs - S(sgn_pow(A.parity(b))) * rhs;
        if (!is_zero(diff)) r.nonzero.push_back({{a, b, c, 0}, diff});
      }
  return r;
}

// Isotropy of g and gt, and <X_i, Xt^j> = delta.
template <class S>
bool pairing_is_manin(const BasicDouble<S>& D) {
  const int N = static_cast<int>(D.pos_x.size());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (!is_zero(D.pairing(D.pos_x[i], D.pos_x[j])) || !is_zero(D.pairing(D.pos_xt[i], D.pos_xt[j]))) return false;
      if (D.pairing(D.pos_x[i], D.pos_xt[j]) != S(i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace lsb

#endif
