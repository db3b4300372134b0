#include "lsb/supermatrix.hpp"

namespace lsb {

namespace {

// Row-reduces w in place; returns the pivot columns. det_sign tracks row swaps.
std::vector<int> row_reduce(MatQ& w, int& swaps, bool full) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(w.rows()), cols = static_cast<int>(w.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && w(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      w.row(p).swap(w.row(r));
      ++swaps;
    }
    GScalar inv = w(r, c).inverse();
    for (int i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r || w(i, c).is_zero()) continue;
      GScalar factor = w(i, c) * inv;
      for (int j = c; j < cols; ++j) w(i, j) -= factor * w(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

GScalar det(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (m.rows() == 0) return GScalar(1);
  MatQ w = m;
  int swaps = 0;
  auto piv = row_reduce(w, swaps, false);
  if (static_cast<Eigen::Index>(piv.size()) < m.rows()) return GScalar(0);
  GScalar d = (swaps % 2) ? GScalar(-1) : GScalar(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) d *= w(i, i);
  return d;
}

int rank(const MatQ& m) {
  MatQ w = m;
  int swaps = 0;
  return static_cast<int>(row_reduce(w, swaps, false).size());
}

std::optional<MatQ> inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  MatQ w(n, 2 * n);
  w << m, MatQ::Identity(n, n);
  int swaps = 0;
  auto piv = row_reduce(w, swaps, true);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i) {
    GScalar inv = w(i, i).inverse();
    w.row(i) *= inv;
  }
  return MatQ(w.rightCols(n));
}

std::optional<GScalar> sdet_schur_B(const SuperMatrix& M) {
  if (M.dims.n == 0) return det(M.A());
  auto Binv = inverse(M.B());
  if (!Binv) return std::nullopt;
  MatQ schur = M.A() - M.C() * *Binv * M.D();
  return det(schur) / det(M.B());
}

std::optional<GScalar> sdet_schur_A(const SuperMatrix& M) {
  if (M.dims.m == 0) return det(M.B()).inverse();
  auto Ainv = inverse(M.A());
  if (!Ainv) return std::nullopt;
  MatQ schur = M.B() - M.D() * *Ainv * M.C();
  GScalar ds = det(schur);
  if (ds.is_zero()) return std::nullopt;
  return det(M.A()) / ds;
}

GScalar superdeterminant(const SuperMatrix& M) {
  if (auto s = sdet_schur_B(M)) return *s;
  if (auto s = sdet_schur_A(M)) return *s;
  throw SdetUndefined("sdet undefined: det A and det B both vanish");
}

std::optional<SuperMatrix> superinverse_blocks(const SuperMatrix& M) {
  const int m = M.dims.m, n = M.dims.n;
  if (m == 0 || n == 0) {
    auto inv = inverse(M.mat);
    if (!inv) return std::nullopt;
    return SuperMatrix(M.dims, *inv);
  }
  auto Ai = inverse(M.A());
  auto Bi = inverse(M.B());
  if (!Ai || !Bi) return std::nullopt;
  MatQ A = M.A(), B = M.B(), C = M.C(), D = M.D();
  auto top = inverse(MatQ(MatQ::Identity(m, m) - *Ai * C * *Bi * D));
  auto bot = inverse(MatQ(MatQ::Identity(n, n) - *Bi * D * *Ai * C));
  if (!top || !bot) return std::nullopt;
  MatQ out(m + n, m + n);
  out.topLeftCorner(m, m) = *top * *Ai;
  out.topRightCorner(m, n) = -(*top * *Ai * C * *Bi);
  out.bottomLeftCorner(n, m) = -(*bot * *Bi * D * *Ai);
  out.bottomRightCorner(n, n) = *bot * *Bi;
  return SuperMatrix(M.dims, std::move(out));
}

SuperMatrix superinverse(const SuperMatrix& M) {
  if (auto s = superinverse_blocks(M)) return *s;
  auto inv = inverse(M.mat);
  if (!inv) throw SingularMatrix("singular matrix " + matrix_str(M.mat));
  return SuperMatrix(M.dims, *inv);
}

TransformCheck is_transformation_matrix(const SuperMatrix& M) {
  TransformCheck r;
  auto flag = [&](std::string msg) {
    r.ok = false;
    r.diagnostics.push_back(std::move(msg));
  };
  const int N = M.dims.size();
  bool a_real = true, b_real = true, c_real = true, d_imag = true;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const GScalar& x = M(i, j);
      int pi = M.dims.parity(i), pj = M.dims.parity(j);
      if (pi == 1 && pj == 0) {
        d_imag = d_imag && x.is_pure_imaginary();
      } else if (!x.is_real()) {
        (pi == 0 && pj == 0 ? a_real : pi == 1 ? b_real : c_real) = false;
      }
    }
  if (!a_real) flag("A not real");
  if (!b_real) flag("B not real");
  if (!c_real) flag("C not real");
  if (!d_imag) flag("D not pure imaginary");
  try {
    if (superdeterminant(M).is_zero()) flag("sdet is zero");
  } catch (const SdetUndefined&) {
    flag("sdet undefined");
  }
  return r;
}

std::string matrix_str(const MatQ& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).str();
    }
  }
  return out + "]";
}

}  // namespace lsb
