#include <doctest.h>

#include "helpers.hpp"

using namespace gmaderiv;
using testutil::GF;
using testutil::matrix_of;
using testutil::QQ;
using testutil::vec_of;

namespace {

// Exhaustive vectors of GF(p)^n, the enumeration oracle for small kernels.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  const std::uint64_t p = f.characteristic();
  std::vector<Vec> out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    Vec v;
    for (std::uint64_t d : digits) v.push_back(Scalar::of(f, static_cast<long long>(d)));
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool solves(const Matrix& m, const Vec& v) {
  return is_zero_vec(m * v);
}

}  // namespace

TEST_CASE("rref of the identity is the identity") {
  const auto r = rref(Matrix::identity(QQ(), 2));
  CHECK(r.reduced == Matrix::identity(QQ(), 2));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of the zero matrix is zero with empty pivots") {
  const Matrix z(QQ(), 3, 3);
  const auto r = rref(z);
  CHECK(r.reduced == z);
  CHECK(r.rank == 0);
  CHECK(r.pivot_columns.empty());
}

TEST_CASE("rank-1 elimination matches the hand oracle") {
  const Matrix m = matrix_of(QQ(), {{"1", "2"}, {"2", "4"}});
  const auto r = rref(m);
  CHECK(r.reduced == matrix_of(QQ(), {{"1", "2"}, {"0", "0"}}));
  CHECK(r.rank == 1);
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace_basis(Matrix::identity(QQ(), 4)).empty());
  CHECK(nullspace_basis(Matrix(QQ(), 2, 3)).size() == 3);
}

TEST_CASE("nullspace over GF(3) agrees with exhaustive enumeration") {
  const Field f = GF(3);
  const Matrix m = matrix_of(f, {{"1", "1"}});
  const auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(solves(m, basis[0]));
  // Oracle: enumerate all 9 vectors; solutions must be exactly the span.
  std::size_t solutions = 0;
  for (const auto& v : all_vectors(f, 2))
    if (solves(m, v)) ++solutions;
  CHECK(solutions == 3);  // p^nullity
}

TEST_CASE("solve: identity, inconsistent, and diagonal with back-substitution") {
  const Vec b = vec_of(QQ(), {"4", "-5"});
  CHECK(*solve(Matrix::identity(QQ(), 2), b) == b);

  CHECK_FALSE(solve(Matrix(QQ(), 2, 2), b).has_value());

  const Matrix diag = matrix_of(QQ(), {{"2", "0"}, {"0", "3"}});
  const Vec rhs = vec_of(QQ(), {"1", "1"});
  const auto x = solve(diag, rhs);
  REQUIRE(x.has_value());
  CHECK(*x == vec_of(QQ(), {"1/2", "1/3"}));
  CHECK(diag * *x == rhs);  // substitute back
}

TEST_CASE("solve rejects right-hand sides of the wrong length") {
  CHECK_THROWS_AS(solve(Matrix::identity(QQ(), 2), vec_of(QQ(), {"1"})), DimensionError);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937_64 rng(20260809);
  for (const Field& f : {QQ(), GF(2), GF(5)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      const Matrix m = testutil::random_matrix(f, rows, cols, rng);
      const auto r = rref(m);
      const auto basis = nullspace_basis(m);
      CHECK(r.rank + basis.size() == cols);
      for (const auto& v : basis) CHECK(solves(m, v));
      CHECK(rref(r.reduced).reduced == r.reduced);
    }
  }
}

TEST_CASE("GF(2) kernels agree with exhaustive enumeration") {
  std::mt19937_64 rng(7);
  const Field f = GF(2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    const Matrix m = testutil::random_matrix(f, rows, cols, rng);
    const auto basis = nullspace_basis(m);
    std::size_t solutions = 0;
    for (const auto& v : all_vectors(f, cols))
      if (solves(m, v)) ++solutions;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= 2;
    CHECK(solutions == expected);
  }
}

TEST_CASE("mixing fields in matrix operations is an error") {
  CHECK_THROWS_AS(Matrix::identity(QQ(), 2) * Matrix::identity(GF(3), 2), FieldMismatchError);
  Matrix m(QQ(), 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Scalar::one(GF(3))), FieldMismatchError);
}
