#ifndef LSB_GRADING_HPP
#define LSB_GRADING_HPP

#include <stdexcept>
#include <string>

#include "lsb/gscalar.hpp"

namespace lsb {

// m bosons followed by n fermions. Indices are 0-based throughout the library;
// generator names (X1, X2, ...) are 1-based.
struct GradedDims {
  int m = 0;
  int n = 0;

  GradedDims() = default;
  GradedDims(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("graded dimensions need m + n >= 1");
  }

  int size() const { return m + n; }
  int parity(int i) const {
    check(i);
    return i < m ? 0 : 1;
  }
  void check(int i) const {
    if (i < 0 || i >= m + n) throw std::out_of_range("index " + std::to_string(i) + " out of range");
  }
  std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

// (-1)^{|i||j|} as an int
inline int psign(const GradedDims& d, int i, int j) {
  return (d.parity(i) & d.parity(j)) ? -1 : 1;
}

// (-1)^e for an integer exponent
inline int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

inline GScalar parity_sign(int i, int j, const GradedDims& d) { return GScalar(psign(d, i, j)); }

}  // namespace lsb

#endif
