#include "doctest.h"

#include <random>

#include "lsb/supermatrix.hpp"

using namespace lsb;

static GScalar S(const char* s) { return GScalar::parse(s); }

static SuperMatrix SM(GradedDims d, std::initializer_list<std::initializer_list<const char*>> rows) {
  MatQ m(d.size(), d.size());
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (auto* e : row) m(r, c++) = S(e);
    ++r;
  }
  return SuperMatrix(d, m);
}

TEST_CASE("supertranspose block rule") {
  GradedDims d(1, 1);
  auto M = SM(d, {{"2", "3"}, {"5i", "7"}});
  CHECK(supertranspose(M) == SM(d, {{"2", "5i"}, {"-3", "7"}}));
  CHECK(supertranspose(M, 2) == SM(d, {{"2", "-3"}, {"-5i", "7"}}));
  CHECK(supertranspose(M, 4) == M);
  auto diag = SM(GradedDims(2, 1), {{"1", "2", "0"}, {"3", "4", "0"}, {"0", "0", "5"}});
  CHECK(supertranspose(diag) == SM(GradedDims(2, 1), {{"1", "3", "0"}, {"2", "4", "0"}, {"0", "0", "5"}}));
}

TEST_CASE("superdeterminant") {
  CHECK(superdeterminant(SuperMatrix::identity(GradedDims(2, 1))) == GScalar(1));
  CHECK(superdeterminant(SM(GradedDims(1, 1), {{"2", "0"}, {"0", "3"}})) == S("2/3"));
  auto M = SM(GradedDims(1, 1), {{"1", "1"}, {"i", "1"}});
  CHECK(sdet_schur_B(M).value() == S("1-i"));
  CHECK(sdet_schur_A(M).value() == S("1-i").inverse());
  // with c-number entries the two complements are det M / det(B)^2 and det(A)^2 / det M
  CHECK(sdet_schur_B(M).value() == det(M.mat) / (det(M.B()) * det(M.B())));
  auto Z = SM(GradedDims(1, 1), {{"0", "1"}, {"i", "0"}});
  CHECK_THROWS_AS(superdeterminant(Z), SdetUndefined);
}

TEST_CASE("superinverse") {
  GradedDims d(1, 1);
  CHECK(superinverse(SuperMatrix::identity(GradedDims(1, 2))) == SuperMatrix::identity(GradedDims(1, 2)));
  auto D = SM(d, {{"2", "0"}, {"0", "3"}});
  CHECK(superinverse(D) == SM(d, {{"1/2", "0"}, {"0", "1/3"}}));
  auto M = SM(d, {{"1", "1"}, {"i", "1"}});
  auto Mi = superinverse_blocks(M).value();
  CHECK((M * Mi) == SuperMatrix::identity(d));
  CHECK((Mi * M) == SuperMatrix::identity(d));
  // fallback: det A = det B = 0 but M invertible
  auto Z = SM(d, {{"0", "1"}, {"i", "0"}});
  CHECK(!superinverse_blocks(Z).has_value());
  CHECK((Z * superinverse(Z)) == SuperMatrix::identity(d));
  CHECK_THROWS_AS(superinverse(SM(d, {{"1", "1"}, {"1", "1"}})), SingularMatrix);
}

TEST_CASE("transformation matrix pattern") {
  CHECK(is_transformation_matrix(SuperMatrix::identity(GradedDims(2, 1))));
  CHECK(is_transformation_matrix(SM(GradedDims(1, 2), {{"1", "0", "0"}, {"0", "2", "0"}, {"0", "3", "2"}})));
  auto bad = is_transformation_matrix(SM(GradedDims(1, 1), {{"1", "0"}, {"1", "1"}}));
  CHECK(!bad.ok);
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0] == "D not pure imaginary");
  CHECK(!is_transformation_matrix(SM(GradedDims(1, 1), {{"i", "0"}, {"0", "1"}})));
  CHECK(!is_transformation_matrix(SM(GradedDims(1, 1), {{"1", "i"}, {"0", "1"}})));
  CHECK(!is_transformation_matrix(SM(GradedDims(1, 1), {{"0", "0"}, {"0", "1"}})));
}

TEST_CASE("exact det and inverse against cofactor oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> u(-3, 3);
  auto cofactor_det = [](const MatQ& m, auto&& self) -> GScalar {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return GScalar(1);
    GScalar d;
    for (int c = 0; c < n; ++c) {
      MatQ minor(n - 1, n - 1);
      for (int i = 1; i < n; ++i)
        for (int j = 0, jj = 0; j < n; ++j)
          if (j != c) minor(i - 1, jj++) = m(i, j);
      d += GScalar(c % 2 ? -1 : 1) * m(0, c) * self(minor, self);
    }
    return d;
  };
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 4;
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = GScalar(mpq_class(u(rng)), mpq_class(u(rng) % 2));
    CHECK(det(m) == cofactor_det(m, cofactor_det));
    if (auto inv = inverse(m)) {
      CHECK(MatQ(m * *inv) == MatQ::Identity(n, n));
    } else {
      CHECK(det(m).is_zero());
    }
  }
}
