#ifndef LSB_SUPERMATRIX_HPP
#define LSB_SUPERMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsb/grading.hpp"
#include "lsb/scalar.hpp"

namespace lsb {

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

// (m|n) block matrix [[A, C], [D, B]]; rows and columns share the grading.
template <class S>
struct BasicSuperMatrix {
  GradedDims dims;
  Mat<S> mat;

  BasicSuperMatrix() = default;
  BasicSuperMatrix(GradedDims d, Mat<S> m) : dims(d), mat(std::move(m)) {
    if (mat.rows() != dims.size() || mat.cols() != dims.size())
      throw std::invalid_argument("matrix is " + std::to_string(mat.rows()) + "x" +
                                  std::to_string(mat.cols()) + ", dims " + dims.str() + " need " +
                                  std::to_string(dims.size()));
  }
  static BasicSuperMatrix identity(GradedDims d) {
    return BasicSuperMatrix(d, Mat<S>::Identity(d.size(), d.size()));
  }

  auto A() const { return mat.topLeftCorner(dims.m, dims.m); }
  auto C() const { return mat.topRightCorner(dims.m, dims.n); }
  auto D() const { return mat.bottomLeftCorner(dims.n, dims.m); }
  auto B() const { return mat.bottomRightCorner(dims.n, dims.n); }

  const S& operator()(int r, int c) const { return mat(r, c); }
  S& operator()(int r, int c) { return mat(r, c); }

  friend bool operator==(const BasicSuperMatrix& a, const BasicSuperMatrix& b) {
    return a.dims == b.dims && a.mat == b.mat;
  }
  friend BasicSuperMatrix operator*(const BasicSuperMatrix& a, const BasicSuperMatrix& b) {
    if (!(a.dims == b.dims)) throw std::invalid_argument("supermatrix product with mismatched dims");
    return BasicSuperMatrix(a.dims, a.mat * b.mat);
  }
};

using SuperMatrix = BasicSuperMatrix<GScalar>;

// st([[A, C], [D, B]]) = [[A^t, D^t], [-C^t, B^t]]; period 4.
template <class S>
BasicSuperMatrix<S> supertranspose(const BasicSuperMatrix<S>& M) {
  const int m = M.dims.m, n = M.dims.n;
  Mat<S> out(m + n, m + n);
  out.topLeftCorner(m, m) = M.A().transpose();
  out.topRightCorner(m, n) = M.D().transpose();
  out.bottomLeftCorner(n, m) = -M.C().transpose();
  out.bottomRightCorner(n, n) = M.B().transpose();
  return BasicSuperMatrix<S>(M.dims, std::move(out));
}

template <class S>
BasicSuperMatrix<S> supertranspose(const BasicSuperMatrix<S>& M, int times) {
  BasicSuperMatrix<S> r = M;
  for (int k = 0; k < ((times % 4) + 4) % 4; ++k) r = supertranspose(r);
  return r;
}

GScalar det(const MatQ& m);
std::optional<MatQ> inverse(const MatQ& m);
int rank(const MatQ& m);

// det(A - C B^-1 D) / det B, when det B != 0
std::optional<GScalar> sdet_schur_B(const SuperMatrix& M);
// det A / det(B - D A^-1 C), when det A != 0
std::optional<GScalar> sdet_schur_A(const SuperMatrix& M);

struct SdetUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

// Uses the B-complement form when det B != 0, the A-complement form otherwise.
GScalar superdeterminant(const SuperMatrix& M);

// Block inverse in the regime det A, det B != 0.
std::optional<SuperMatrix> superinverse_blocks(const SuperMatrix& M);
// Block formula when it applies, Gauss-Jordan otherwise.
SuperMatrix superinverse(const SuperMatrix& M);

struct TransformCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

// A, B, C real; D pure imaginary; sdet defined and nonzero.
TransformCheck is_transformation_matrix(const SuperMatrix& M);

// "[a,b; c,d]"
std::string matrix_str(const MatQ& m);
inline std::string matrix_str(const SuperMatrix& m) { return matrix_str(m.mat); }

}  // namespace lsb

#endif
