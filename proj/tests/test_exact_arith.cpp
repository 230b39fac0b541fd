// Copyright 2026 The lcpnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lcpnash/errors.hpp"
#include "lcpnash/linalg.hpp"
#include "lcpnash/rational.hpp"

using namespace lcpnash;

TEST_CASE("rationals are canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+3/9") == make_rational(1, 3));
  CHECK(parse_rational("123456789012345678901234567890") * 10 == parse_rational("1234567890123456789012345678900"));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "1/0", "0/0", "1.5", "1e3", "a", "1/", "/2", "1//2", " 1", "--1", "0x10", "4/-6"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("to_decimal rounds half away from zero") {
  CHECK(to_decimal(make_rational(1, 3), 3) == "0.333");
  CHECK(to_decimal(make_rational(2, 3), 3) == "0.667");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(make_rational(5, 2), 0) == "3");
  CHECK(to_decimal(Rational(-2), 2) == "-2.00");
}

TEST_CASE("vector algebra") {
  const Vector a = Vector::from_ints({1, -2, 3});
  const Vector b{make_rational(1, 2), 0, 1};
  CHECK(a + b == Vector{make_rational(3, 2), -2, 4});
  CHECK(dot(a, b) == make_rational(7, 2));
  CHECK(hadamard(a, b) == Vector{make_rational(1, 2), 0, 3});
  CHECK(a.sum() == 2);
  CHECK_FALSE(a.is_nonnegative());
  CHECK(b.is_nonnegative());
  CHECK_FALSE(b.is_positive());
  CHECK(Vector::zeros(2).is_zero());
  CHECK(to_string(a) == "[1, -2, 3]");
  CHECK(Vector::from_ints({1, 2}) < Vector::from_ints({1, 3}));
  const std::size_t idx[] = {2, 0};
  CHECK(a.select(idx) == Vector::from_ints({3, 1}));
}

TEST_CASE("matrix algebra and submatrices") {
  const Matrix m = Matrix::from_ints({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.transpose() == Matrix::from_ints({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(m * Vector::from_ints({1, 0, -1}) == Vector::from_ints({-2, -2}));
  CHECK(m * Matrix::identity(3) == m);
  const std::size_t rows[] = {1};
  const std::size_t cols[] = {2, 0};
  CHECK(m.submatrix(rows, cols) == Matrix::from_ints({{6, 4}}));
  CHECK(m.is_positive());
  CHECK_FALSE(Matrix::identity(2).is_positive());
  CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), ContractViolation);
}

TEST_CASE("solve_linear examples") {
  CHECK(*solve_linear(Matrix::identity(3), Vector::from_ints({1, 2, 3})) == Vector::from_ints({1, 2, 3}));
  CHECK(*solve_linear(Matrix::from_ints({{2, 0}, {0, 4}}), Vector::from_ints({1, 1})) ==
        Vector{make_rational(1, 2), make_rational(1, 4)});
  CHECK_FALSE(solve_linear(Matrix::from_ints({{1, 1}, {2, 2}}), Vector::from_ints({1, 1})).has_value());
  CHECK_THROWS_AS(solve_linear(Matrix::identity(2), Vector::from_ints({1, 2, 3})), ContractViolation);
  CHECK_THROWS_AS(solve_linear(Matrix::zeros(2, 3), Vector::from_ints({1, 2})), ContractViolation);
}

TEST_CASE("diag_of examples") {
  CHECK(diag_of(Vector::from_ints({1, 1})) == Matrix::identity(2));
  CHECK(diag_of(Vector::from_ints({2, 3})) == Matrix::from_ints({{2, 0}, {0, 3}}));
  CHECK(diag_of(Vector{make_rational(1, 2)}) == Matrix{{make_rational(1, 2)}});
  CHECK_THROWS_AS(diag_of(Vector::from_ints({1, 0})), CoveringVectorError);
  CHECK_THROWS_AS(diag_of(Vector::from_ints({-1})), CoveringVectorError);
}

TEST_CASE("rank, determinant, nullspace") {
  const Matrix a = Matrix::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  CHECK(determinant(a) == 0);
  CHECK(determinant(Matrix::from_ints({{2, 1}, {1, 3}})) == 5);
  CHECK(determinant(Matrix::from_ints({{0, 1}, {1, 0}})) == -1);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK((a * ns[0]).is_zero());
  CHECK_FALSE(ns[0].is_zero());
}

TEST_CASE("complete_basis extends independent columns") {
  const Matrix a = Matrix::from_ints({{1, 0, 1, 0}, {0, 0, 1, 1}});
  const auto cols = complete_basis(a, {2});
  CHECK(cols == std::vector<std::size_t>{0, 2});
  CHECK(columns_independent(a, cols));
  const std::size_t dep[] = {0, 2, 3};
  CHECK_FALSE(columns_independent(a, dep));
}

TEST_CASE("enumerate_bfs lists polytope vertices") {
  // x1 + x2 + x3 = 1, x >= 0: the three unit vectors
  const auto v = enumerate_bfs(Matrix::from_ints({{1, 1, 1}}), Vector::from_ints({1}));
  CHECK(v == std::vector<Vector>{Vector::from_ints({0, 0, 1}), Vector::from_ints({0, 1, 0}),
                                 Vector::from_ints({1, 0, 0})});
  CHECK(enumerate_bfs(Matrix::from_ints({{1, 1}}), Vector::from_ints({-1})).empty());
  CHECK(enumerate_bfs(Matrix::from_ints({{1, 1}, {1, 1}}), Vector::from_ints({1, 2})).empty());
  // redundant row keeps the same vertices
  CHECK(enumerate_bfs(Matrix::from_ints({{1, 1}, {2, 2}}), Vector::from_ints({1, 2})).size() == 2);
}

TEST_CASE("combinations and binomials") {
  std::size_t count = 0;
  for_each_combination(5, 2, [&](std::span<const std::size_t> c) {
    CHECK(c.size() == 2);
    CHECK(c[0] < c[1]);
    ++count;
    return true;
  });
  CHECK(count == 10);
  CHECK(binomial(9, 4) == 126);
  CHECK(binomial(3, 5) == 0);
  std::size_t stopped = 0;
  for_each_combination(6, 3, [&](std::span<const std::size_t>) { return ++stopped < 4; });
  CHECK(stopped == 4);
}

TEST_CASE("property: solve_linear reproduces b and diag_of matches hadamard") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-6, 6), dim(1, 5), pos(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    Matrix a(n, n);
    Vector b(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = make_rational(entry(rng), pos(rng));
      d[i] = make_rational(pos(rng), pos(rng));
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    const auto x = solve_linear(a, b);
    CHECK(x.has_value() == (determinant(a) != 0));
    if (x) CHECK(a * *x == b);
    CHECK(diag_of(d) * b == hadamard(d, b));
    for (const auto& v : b) CHECK(gcd(v.get_num(), v.get_den()) == 1);
  }
}
