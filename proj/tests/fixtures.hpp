#ifndef LSB_TEST_FIXTURES_HPP
#define LSB_TEST_FIXTURES_HPP

// Hand-built algebras used as oracles independent of the catalog files.

#include "lsb/bialgebra.hpp"

namespace fx {

using namespace lsb;

inline GScalar S(const char* s) { return GScalar::parse(s); }

// 1-based generator numbers, as in the tables
inline LieSuperAlgebra make(const char* name, int m, int n,
                            std::initializer_list<std::tuple<int, int, int, const char*>> br) {
  LieSuperAlgebra g(name, GradedDims(m, n));
  for (auto& [i, j, k, v] : br) g.add_bracket(i - 1, j - 1, k - 1, S(v));
  return g;
}

inline DualStructure dual(int m, int n, std::initializer_list<std::tuple<int, int, int, const char*>> br) {
  return as_dual(make("dual", m, n, br));
}

inline LieSuperAlgebra B() { return make("B", 1, 1, {{1, 2, 2, "1"}}); }
inline LieSuperAlgebra A11A() { return make("A11A", 1, 1, {{2, 2, 1, "i"}}); }
inline LieSuperAlgebra C1p(const char* p) { return make("C1p", 2, 1, {{1, 2, 2, "1"}, {1, 3, 3, p}}); }
inline LieSuperAlgebra C2p(const char* p) { return make("C2p", 1, 2, {{1, 2, 2, "1"}, {1, 3, 3, p}}); }
inline LieSuperAlgebra C3() { return make("C3", 1, 2, {{1, 3, 2, "1"}}); }
inline LieSuperAlgebra C4() { return make("C4", 1, 2, {{1, 2, 2, "1"}, {1, 3, 2, "1"}, {1, 3, 3, "1"}}); }
inline LieSuperAlgebra C5p(const char* p) {
  return make("C5p", 1, 2, {{1, 2, 2, p}, {1, 2, 3, "-1"}, {1, 3, 2, "1"}, {1, 3, 3, p}});
}
inline LieSuperAlgebra C1h() { return make("C1h", 2, 1, {{1, 2, 2, "1"}, {1, 3, 3, "1/2"}, {3, 3, 2, "i"}}); }
inline LieSuperAlgebra A2A1() { return make("A11_2A_1", 1, 2, {{2, 2, 1, "i"}, {3, 3, 1, "i"}}); }
inline LieSuperAlgebra A2A2() { return make("A11_2A_2", 1, 2, {{2, 2, 1, "i"}, {3, 3, 1, "-i"}}); }

}  // namespace fx

#endif
