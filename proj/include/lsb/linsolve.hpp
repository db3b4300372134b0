#ifndef LSB_LINSOLVE_HPP
#define LSB_LINSOLVE_HPP

#include <vector>

#include "lsb/scalar.hpp"

namespace lsb {

// Fraction-free Gauss-Jordan over Q or Q[p]. Every pivot row ends with the same
// pivot value `det` (the last pivot), all entries stay polynomial.
struct Elimination {
  MatP reduced;
  std::vector<int> pivot_cols;
  std::vector<MultiPoly> pivots;  // pivot value at each step
  MultiPoly det = MultiPoly(1);
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Elimination fraction_free_gauss_jordan(MatP m);

// One vector per free column, made primitive (divided by the polynomial gcd of its
// entries) and scaled so the first nonzero entry has leading coefficient 1.
std::vector<VecP> nullspace_basis(const Elimination& e);
std::vector<int> free_columns(const Elimination& e);

// Rational roots of a univariate polynomial with rational coefficients.
std::vector<mpq_class> rational_roots(const MultiPoly& p, const std::string& var);

// Divide by the gcd of the entries and normalize the first nonzero leading coefficient.
VecP primitive_normalize(VecP v);

}  // namespace lsb

#endif
