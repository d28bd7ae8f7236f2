/*
 * Copyright 2026 The planesym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "planesym/exactalg.hpp"
#include "support.hpp"

using namespace planesym;
using planesym::testing::cofactor_det;
using planesym::testing::expansion_pfaffian;
using planesym::testing::permutation_permanent;
using planesym::testing::random_matrix;
using planesym::testing::random_skew;

TEST_SUITE("poly") {
  TEST_CASE("arithmetic and rendering") {
    const Poly q = Poly::monomial(1);
    const Poly p = (1 + q) * (1 + q);
    CHECK(p == Poly{1, 2, 1});
    CHECK(p.to_string() == "1 + 2*q + q^2");
    CHECK(Poly().to_string() == "0");
    CHECK((p - p).is_zero());
    CHECK(Poly{0, 0, -3}.to_string() == "-3*q^2");
    CHECK(p.eval(BigInt(1)) == 4);
    CHECK(Poly{0, 0, 5, 1}.order() == 2);
    CHECK(Poly{0, 0, 5, 1}.shift_down(2) == Poly{5, 1});
    const Poly one_plus_q{1, 1};
    CHECK_THROWS_AS((void)one_plus_q.shift_down(1), std::domain_error);
    CHECK(Poly{0, -2, 1}.sign_normalized() == Poly{0, 2, -1});
  }

  TEST_CASE("exact division") {
    const Poly a{1, 3, 3, 1};
    const Poly two_plus_q{2, 1};
    CHECK(exact_divide(a, Poly{1, 1}) == Poly{1, 2, 1});
    CHECK_THROWS_AS(exact_divide(a, two_plus_q), std::domain_error);
    CHECK(exact_divide(BigInt(12), BigInt(4)) == 3);
    CHECK_THROWS_AS(exact_divide(BigInt(12), BigInt(5)), std::domain_error);
  }
}

TEST_SUITE("det") {
  TEST_CASE("examples") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(det(IntMatrix::from_rows({{0, 2}, {3, 0}})) == 6);
    CHECK(det_signed(IntMatrix::from_rows({{0, 2}, {3, 0}})) == -6);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
  }

  TEST_CASE("agrees with cofactor expansion up to 6x6") {
    std::mt19937 rng(11);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, n, n, -4, 4);
        CHECK(det_signed(m) == cofactor_det(m));
      }
    }
  }

  TEST_CASE("zero column short-circuits") {
    auto m = IntMatrix::from_rows({{1, 0, 2}, {3, 0, 4}, {5, 0, 6}});
    CHECK(det(m) == 0);
  }

  TEST_CASE("evaluation commutes with the polynomial determinant") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = Poly{dist(rng), dist(rng), dist(rng)};
      for (int q = -2; q <= 2; ++q) CHECK(det_signed(m).eval(BigInt(q)) == det_signed(evaluate(m, q)));
    }
  }
}

TEST_SUITE("pfaffian") {
  TEST_CASE("examples") {
    CHECK(pfaffian_abs(IntMatrix::from_rows({{0, 5}, {-5, 0}})) == 5);
    CHECK(pfaffian_abs(IntMatrix(3, 3)) == 0);
    CHECK(pfaffian_abs(IntMatrix(0, 0)) == 1);
    const auto symmetric = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(pfaffian_abs(symmetric), std::invalid_argument);
  }

  TEST_CASE("4x4 three-term formula") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_skew(rng, 4, -9, 9);
      BigInt three = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
      CHECK(pfaffian_signed(m) == three);
      CHECK(pfaffian_abs(m) == abs(three));
    }
  }

  TEST_CASE("elimination matches row expansion and Pf^2 = Det") {
    std::mt19937 rng(8);
    for (std::size_t n = 2; n <= 10; n += 2) {
      for (int trial = 0; trial < 8; ++trial) {
        const auto m = random_skew(rng, n, -3, 3);
        const BigInt pf = expansion_pfaffian(m);
        CHECK(pfaffian_signed(m) == pf);
        CHECK(pf * pf == det_signed(m));
        CHECK(pfaffian_abs(m) == abs(pf));
      }
    }
  }

  TEST_CASE("polynomial Pfaffian") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
      PolyMatrix m(6, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
          m(i, j) = Poly{dist(rng), dist(rng)};
          m(j, i) = -m(i, j);
        }
      const Poly pf = pfaffian_abs(m);
      CHECK(pf * pf == det_signed(m));
      for (int q = 0; q <= 3; ++q) CHECK(abs(pf.eval(BigInt(q))) == pfaffian_abs(evaluate(m, q)));
    }
  }

  TEST_CASE("block identity Pf([[0,B],[-B^T,0]]) = +-Det(B)") {
    std::mt19937 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
      const auto b = random_matrix(rng, 4, 4, -5, 5);
      IntMatrix m(8, 8);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          m(i, 4 + j) = b(i, j);
          m(4 + j, i) = -b(i, j);
        }
      CHECK(pfaffian_abs(m) == abs(cofactor_det(b)));
    }
  }
}

TEST_SUITE("integer_sqrt") {
  TEST_CASE("examples") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(400) == 20);
    CHECK(integer_sqrt(BigInt("152415787532388367501905199875019052100")) == BigInt("12345678901234567890"));
    CHECK_THROWS_AS(integer_sqrt(401), std::domain_error);
    CHECK_THROWS_AS(integer_sqrt(-4), std::domain_error);
  }

  TEST_CASE("det of a random skew 8x8 is the square of its Pfaffian") {
    std::mt19937 rng(12);
    const auto m = random_skew(rng, 8, -6, 6);
    CHECK(integer_sqrt(det(m)) == abs(expansion_pfaffian(m)));
  }
}

TEST_SUITE("permanent and hafnian") {
  TEST_CASE("examples") {
    CHECK(permanent(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 2);
    CHECK(permanent(IntMatrix::identity(5)) == 1);
    CHECK(hafnian(IntMatrix::from_rows({{0, 1}, {1, 0}})) == 1);
    IntMatrix k4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) k4(i, j) = i == j ? 0 : 1;
    CHECK(hafnian(k4) == 3);
    CHECK(hafnian(IntMatrix(3, 3)) == 0);
    CHECK_THROWS_AS(permanent(IntMatrix(29, 29)), std::length_error);
    CHECK_THROWS_AS(hafnian(IntMatrix(18, 18)), std::length_error);
    const auto lopsided = IntMatrix::from_rows({{0, 1}, {2, 0}});
    CHECK_THROWS_AS(hafnian(lopsided), std::invalid_argument);
  }

  TEST_CASE("Ryser agrees with the permutation sum up to 6x6") {
    std::mt19937 rng(13);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(rng, n, n, -3, 3);
        CHECK(permanent(m) == permutation_permanent(m));
      }
    }
  }

  TEST_CASE("Hf([[0,B],[B^T,0]]) = Per(B)") {
    std::mt19937 rng(14);
    for (std::size_t n : {3U, 4U}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto b = random_matrix(rng, n, n, 0, 4);
        IntMatrix m(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            m(i, n + j) = b(i, j);
            m(n + j, i) = b(i, j);
          }
        CHECK(hafnian(m) == permanent(b));
      }
    }
  }
}

TEST_CASE("128-bit and generic Ryser paths agree") {
  std::mt19937 rng(15);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto m = random_matrix(rng, n, n, -50, 50);
    CHECK(permanent(m) == detail::permanent_ryser(m));
    CHECK(permanent(m.map([](const BigInt& x) { return Poly(x); })) == Poly(permanent(m)));
  }
  // Entries too large for the 128-bit bound fall back to big integers.
  IntMatrix big(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) big(i, j) = BigInt("100000000000000000000000");
  CHECK(permanent(big) == 6 * BigInt("1000000000000000000000000000000000000000000000000000000000000000000000"));
}
