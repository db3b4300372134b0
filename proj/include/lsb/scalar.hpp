#ifndef LSB_SCALAR_HPP
#define LSB_SCALAR_HPP

// Eigen glue and the small generic vocabulary shared by GScalar and MultiPoly.

#include <Eigen/Core>

#include "lsb/gscalar.hpp"
#include "lsb/multipoly.hpp"

namespace Eigen {

template <>
struct NumTraits<lsb::GScalar> : GenericNumTraits<lsb::GScalar> {
  typedef lsb::GScalar Real;
  typedef lsb::GScalar NonInteger;
  typedef lsb::GScalar Literal;
  typedef lsb::GScalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lsb::MultiPoly> : GenericNumTraits<lsb::MultiPoly> {
  typedef lsb::MultiPoly Real;
  typedef lsb::MultiPoly NonInteger;
  typedef lsb::MultiPoly Literal;
  typedef lsb::MultiPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lsb {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<GScalar>;
using VecQ = Vec<GScalar>;
using MatP = Mat<MultiPoly>;
using VecP = Vec<MultiPoly>;

inline bool is_zero(const GScalar& s) { return s.is_zero(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline GScalar re_part(const GScalar& s) { return s.real_part(); }
inline GScalar im_part(const GScalar& s) { return s.imag_part(); }
inline MultiPoly re_part(const MultiPoly& p) { return p.re(); }
inline MultiPoly im_part(const MultiPoly& p) { return p.im(); }

inline std::string to_str(const GScalar& s) { return s.str(); }
inline std::string to_str(const MultiPoly& p) { return p.str(); }

template <class S>
int count_nonzero(const Mat<S>& m) {
  int c = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) c += !is_zero(m(i, j));
  return c;
}

inline MatQ evaluate(const MatP& m, const Assignment& at) {
  return m.unaryExpr([&](const MultiPoly& p) { return p.eval(at); });
}

inline MatP lift(const MatQ& m) { return m.unaryExpr([](const GScalar& s) { return MultiPoly(s); }); }

}  // namespace lsb

#endif
