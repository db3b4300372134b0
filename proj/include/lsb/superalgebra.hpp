#ifndef LSB_SUPERALGEBRA_HPP
#define LSB_SUPERALGEBRA_HPP

#include <array>
#include <string>
#include <vector>

#include "lsb/grading.hpp"
#include "lsb/params.hpp"
#include "lsb/scalar.hpp"

namespace lsb {

// Dense rank-3 array t(i,j,k), N <= 6 in practice.
template <class S>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<size_t>(n) * n * n, S(0)) {}

  int size() const { return n_; }
  const S& operator()(int i, int j, int k) const { return data_[idx(i, j, k)]; }
  S& operator()(int i, int j, int k) { return data_[idx(i, j, k)]; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

  template <class F>
  auto map(F&& fn) const {
    using T = std::decay_t<decltype(fn(std::declval<const S&>()))>;
    Tensor3<T> out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) out(i, j, k) = fn((*this)(i, j, k));
    return out;
  }

 private:
  size_t idx(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
      throw std::out_of_range("tensor index out of range");
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<S> data_;
};

// Structure constants f^k_{ij} over m bosons then n fermions, [X_i, X_j] = f^k_{ij} X_k.
// Both orderings are stored; add_bracket fills the partner slot.
template <class S>
class BasicAlgebra {
 public:
  BasicAlgebra() = default;
  BasicAlgebra(std::string name, GradedDims dims) : name_(std::move(name)), dims_(dims), f_(dims.size()) {}
  BasicAlgebra(std::string name, GradedDims dims, Tensor3<S> f)
      : name_(std::move(name)), dims_(dims), f_(std::move(f)) {
    if (f_.size() != dims_.size()) throw std::invalid_argument("tensor size does not match dims");
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const GradedDims& dims() const { return dims_; }
  int size() const { return dims_.size(); }
  int parity(int i) const { return dims_.parity(i); }

  const S& f(int i, int j, int k) const { return f_(i, j, k); }
  const Tensor3<S>& tensor() const { return f_; }

  // [X_i, X_j] gains v X_k; the (j, i) slot follows by super antisymmetry.
  void add_bracket(int i, int j, int k, const S& v) {
    if (i == j && parity(i) == 0) {
      if (!is_zero(v)) throw std::invalid_argument("bracket of a boson with itself must vanish");
      return;
    }
    f_(i, j, k) += v;
    if (i != j) f_(j, i, k) -= S(psign(dims_, i, j)) * v;
  }
  void set_raw(int i, int j, int k, const S& v) { f_(i, j, k) = v; }

  std::vector<ParamDecl> params;
  // generator names in basis order; empty means X1..XN
  std::vector<std::string> labels;
  std::string label(int i) const {
    return i < static_cast<int>(labels.size()) ? labels[i] : "X" + std::to_string(i + 1);
  }

  friend bool operator==(const BasicAlgebra& a, const BasicAlgebra& b) {
    return a.dims_ == b.dims_ && a.f_ == b.f_;
  }

 private:
  std::string name_;
  GradedDims dims_;
  Tensor3<S> f_;
};

using LieSuperAlgebra = BasicAlgebra<GScalar>;
using SymbolicAlgebra = BasicAlgebra<MultiPoly>;

LieSuperAlgebra specialize(const SymbolicAlgebra& g, const Assignment& at);
SymbolicAlgebra lift(const LieSuperAlgebra& g);
// nullopt when some constant still depends on a parameter
std::optional<LieSuperAlgebra> as_numeric(const SymbolicAlgebra& g);
LieSuperAlgebra abelian(GradedDims dims);

template <class S>
struct Residual {
  struct Entry {
    std::array<int, 4> index;
    S value;
  };
  std::vector<Entry> nonzero;

  bool zero() const { return nonzero.empty(); }
  size_t count() const { return nonzero.size(); }
};

struct Violation {
  enum class Kind { Antisymmetry, Grading, Reality };
  Kind kind;
  int i, j, k;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

const char* kind_name(Violation::Kind k);

template <class S>
ValidationReport validate_structure(const BasicAlgebra<S>& g) {
  ValidationReport rep;
  const int N = g.size();
  auto& d = g.dims();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        const S& v = g.f(i, j, k);
        S anti = v + S(psign(d, i, j)) * g.f(j, i, k);
        if (!is_zero(anti) && i <= j)
          rep.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, "f^k_ij + (-1)^ij f^k_ji = " + to_str(anti)});
        if (is_zero(v)) continue;
        int pi = d.parity(i), pj = d.parity(j), pk = d.parity(k);
        if (((pi + pj) & 1) != pk)
          rep.violations.push_back({Violation::Kind::Grading, i, j, k, "value " + to_str(v)});
        bool odd_odd_even = pi == 1 && pj == 1 && pk == 0;
        if (odd_odd_even ? !is_zero(re_part(v)) : !is_zero(im_part(v)))
          rep.violations.push_back({Violation::Kind::Reality, i, j, k,
                                    std::string(odd_odd_even ? "must be pure imaginary" : "must be real") +
                                        ", got " + to_str(v)});
      }
  return rep;
}

// sum_l (-1)^{i(j+k)} f^m_jl f^l_ki + f^m_il f^l_jk + (-1)^{k(i+j)} f^m_kl f^l_ij
template <class S>
Residual<S> super_jacobi_residual(const BasicAlgebra<S>& g) {
  Residual<S> r;
  const int N = g.size();
  auto p = [&](int x) { return g.parity(x); };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        const int s1 = sgn_pow(p(i) * (p(j) + p(k)));
        const int s3 = sgn_pow(p(k) * (p(i) + p(j)));
        for (int m = 0; m < N; ++m) {
          S acc(0);
          for (int l = 0; l < N; ++l) {
            if (!is_zero(g.f(j, l, m)) && !is_zero(g.f(k, i, l))) acc += S(s1) * g.f(j, l, m) * g.f(k, i, l);
            if (!is_zero(g.f(i, l, m)) && !is_zero(g.f(j, k, l))) acc += g.f(i, l, m) * g.f(j, k, l);
            if (!is_zero(g.f(k, l, m)) && !is_zero(g.f(i, j, l))) acc += S(s3) * g.f(k, l, m) * g.f(i, j, l);
          }
          if (!is_zero(acc)) r.nonzero.push_back({{i, j, k, m}, std::move(acc)});
        }
      }
  return r;
}

// [u, v]^k = f^k_ij u^i v^j
template <class S>
Vec<S> bracket(const BasicAlgebra<S>& g, const Vec<S>& u, const Vec<S>& v) {
  const int N = g.size();
  if (u.size() != N || v.size() != N) throw std::invalid_argument("bracket: vector length mismatch");
  Vec<S> out = Vec<S>::Constant(N, S(0));
  for (int i = 0; i < N; ++i) {
    if (is_zero(u(i))) continue;
    for (int j = 0; j < N; ++j) {
      if (is_zero(v(j))) continue;
      for (int k = 0; k < N; ++k)
        if (!is_zero(g.f(i, j, k))) out(k) += g.f(i, j, k) * u(i) * v(j);
    }
  }
  return out;
}

template <class S>
Vec<S> basis_vector(int N, int i) {
  Vec<S> e = Vec<S>::Constant(N, S(0));
  e(i) = S(1);
  return e;
}

// (Y^i)_jk = -f^i_jk ; (Xt^i)_jk = -ft^ij_k when built from a dual
template <class S>
struct AdjointSet {
  std::vector<Mat<S>> Y;
  std::vector<Mat<S>> Xt;
};

template <class S>
std::vector<Mat<S>> adjoint_matrices(const BasicAlgebra<S>& g) {
  const int N = g.size();
  std::vector<Mat<S>> Y(N, Mat<S>::Constant(N, N, S(0)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) Y[i](j, k) = -g.f(j, k, i);
  return Y;
}

template <class S>
AdjointSet<S> adjoint_rep(const BasicAlgebra<S>& g) {
  return {adjoint_matrices(g), {}};
}

// inverse of adjoint_matrices
template <class S>
Tensor3<S> tensor_from_adjoint(const std::vector<Mat<S>>& Y) {
  const int N = static_cast<int>(Y.size());
  Tensor3<S> t(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) t(j, k, i) = -Y[i](j, k);
  return t;
}

// "c*X2" style term for printing right-hand sides; `first` controls the sign glue.
std::string coefficient_term(const MultiPoly& c, const std::string& gen, bool first);
// Canonical bracket statements, one per unordered pair with a nonzero bracket:
// "[X1,X2] = X2;" or "{X2,X2} = i*X1;".
std::vector<std::string> bracket_statements(const SymbolicAlgebra& g);

}  // namespace lsb

#endif
