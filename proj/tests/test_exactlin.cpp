#include <doctest.h>

#include <random>

#include "artin/matrix.hpp"

using namespace artin;

namespace {

Matrix f2(std::size_t r, std::size_t c, std::vector<std::string> v) {
  return Matrix::from_strings(Field::prime(2), r, c, v);
}

// Every vector of F_2^n, as columns.
std::vector<Matrix> all_f2_vectors(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Matrix v(Field::prime(2), n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v.set(i, 0, Scalar(1u));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("field parsing and arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.format(f5.parse("-1")) == "4");
  CHECK(f5.format(f5.parse("1/2")) == "3");
  Field q = Field::rationals();
  CHECK(q.format(q.parse("-2/4")) == "-1/2");
  CHECK_THROWS_AS(Field::prime(6), InputError);
  CHECK_THROWS_AS(f5.parse("1/5"), InputError);
  CHECK_THROWS_AS(q.parse("x"), InputError);
}

TEST_CASE("rref examples") {
  Field k = Field::prime(2);
  auto id = Matrix::identity(k, 2).rref();
  CHECK(id.reduced == Matrix::identity(k, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  auto z = Matrix(k, 3, 3).rref();
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());
  auto r = f2(2, 2, {"1", "1", "1", "1"}).rref();
  CHECK(r.reduced == f2(2, 2, {"1", "1", "0", "0"}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  Field k = Field::prime(2);
  CHECK(Matrix::identity(k, 3).kernel_basis().cols() == 0);
  CHECK(Matrix(k, 4, 4).kernel_basis().cols() == 4);
  Matrix a = f2(1, 2, {"1", "1"});
  Matrix kb = a.kernel_basis();
  // Oracle: enumerate F_2^2 and collect the nonzero null vectors.
  std::vector<Matrix> null;
  for (const auto& v : all_f2_vectors(2))
    if (!v.is_zero() && (a * v).is_zero()) null.push_back(v);
  REQUIRE(null.size() == 1);
  REQUIRE(kb.cols() == 1);
  CHECK(kb == null[0]);
}

TEST_CASE("solve examples") {
  Field k = Field::prime(3);
  Matrix b = Matrix::from_strings(k, 2, 1, {"1", "2"});
  CHECK(*Matrix::identity(k, 2).solve(b) == b);
  CHECK(!Matrix(k, 2, 2).solve(b));
  Matrix a = Matrix::from_strings(k, 2, 2, {"1", "0", "0", "0"});
  Matrix e2 = Matrix::from_strings(k, 2, 1, {"0", "1"});
  // Oracle: b is in the column space iff appending it keeps the rank.
  CHECK(Matrix::hstack(std::vector<Matrix>{a, e2}).rank() != a.rank());
  CHECK(!a.solve(e2));
  CHECK_THROWS_AS(a.solve(Matrix(k, 3, 1)), InputError);
}

TEST_CASE("rank-nullity, idempotent rref and exact kernels on random matrices") {
  std::mt19937_64 rng(7);
  for (Field k : {Field::prime(2), Field::prime(3), Field::prime(101), Field::rationals()}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix m = Matrix::random(k, r, c, rng);
      if (trial % 3 == 0) m = m * Matrix::random(k, c, c, rng).block(0, 0, c, c);
      auto e = m.rref();
      Matrix kb = m.kernel_basis();
      CHECK(m.rank() + kb.cols() == c);
      CHECK((m * kb).is_zero());
      auto again = e.reduced.rref();
      CHECK(again.reduced == e.reduced);
      CHECK(again.pivots == e.pivots);
      for (std::size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i - 1] < e.pivots[i]);
      Matrix x = Matrix::random(k, c, 1, rng);
      auto sol = m.solve(m * x);
      REQUIRE(sol);
      CHECK(m * *sol == m * x);
    }
  }
}

TEST_CASE("inverse and block helpers") {
  Field k = Field::prime(7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix a = Matrix::random(k, 4, 4, rng);
    if (auto inv = a.inverse()) {
      CHECK(a * *inv == Matrix::identity(k, 4));
    } else {
      CHECK(a.rank() < 4);
    }
  }
  Matrix blk = Matrix::random(k, 2, 2, rng);
  Matrix x = Matrix::random(k, 6, 3, rng);
  CHECK(block_diagonal_product(blk, 3, x) == Matrix::kron(Matrix::identity(k, 3), blk) * x);
}
