#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zxsynth/elementary.hpp"
#include "zxsynth/errors.hpp"
#include "zxsynth/interpret.hpp"

using namespace zxsynth;

namespace {

Matrix eval(const Diagram& d) { return interpret(d); }

Complex random_complex(std::mt19937& rng) {
  std::uniform_real_distribution<double> v(-2.0, 2.0);
  return {v(rng), v(rng)};
}

}  // namespace

TEST_CASE("row multiplication: frozen 8x8 example") {
  // scale basis state |1> by 1/5 on three wires
  Matrix got = eval(diagram_mul(3, 1, {0.2, 0}));
  Matrix want = Matrix::Identity(8, 8);
  want(1, 1) = Complex{0.2, 0};
  CHECK(max_abs_diff(got, want) <= 1e-12);
}

TEST_CASE("row addition: frozen 8x8 example") {
  // add 2 times row 1 to row 3
  Matrix got = eval(diagram_add(3, 1, {2, 0}, 3));
  Matrix want = Matrix::Identity(8, 8);
  want(3, 1) = Complex{2, 0};
  CHECK(max_abs_diff(got, want) <= 1e-12);
}

TEST_CASE("row switch: frozen 8x8 example") {
  Matrix got = eval(diagram_swap(3, 1, 7));
  Matrix want = Matrix::Identity(8, 8);
  want(1, 1) = want(7, 7) = 0;
  want(1, 7) = want(7, 1) = 1;
  CHECK(max_abs_diff(got, want) <= 1e-12);
}

TEST_CASE("single-wire forms") {
  // m = 1 multiplication at index 1 is diag(1, a)
  Complex a{0.3, -1.2};
  Matrix mul1 = eval(diagram_mul(1, 1, a));
  CHECK(mul1(0, 0) == Complex{1, 0});
  CHECK(std::abs(mul1(1, 1) - a) <= 1e-12);
  // m = 1 addition from 0 to 1 is [[1, 0], [a, 1]]
  Matrix add1 = eval(diagram_add(1, 0, a, 1));
  CHECK(std::abs(add1(1, 0) - a) <= 1e-12);
  CHECK(add1(0, 1) == Complex{0, 0});
  // m = 1 switch is NOT
  Matrix sw1 = eval(diagram_swap(1, 0, 1));
  Matrix not_ref(2, 2);
  not_ref << 0, 1, 1, 0;
  CHECK(max_abs_diff(sw1, not_ref) <= 1e-12);
}

TEST_CASE("exhaustive soundness against the oracle") {
  std::mt19937 rng(123);
  for (int m = 1; m <= 3; ++m) {
    const long dim = 1L << m;
    for (long i = 0; i < dim; ++i) {
      for (int rep = 0; rep < 3; ++rep) {
        Complex a = random_complex(rng);
        CHECK(max_abs_diff(eval(diagram_mul(m, i, a)),
                           oracle_matrix(ElementaryOp::row_mul(m, i, a))) <=
              1e-12);
      }
      for (long j = 0; j < dim; ++j) {
        if (i == j) continue;
        Complex a = random_complex(rng);
        CHECK(max_abs_diff(eval(diagram_add(m, i, a, j)),
                           oracle_matrix(ElementaryOp::row_add(m, i, a, j))) <=
              1e-12);
        CHECK(max_abs_diff(eval(diagram_swap(m, i, j)),
                           oracle_matrix(ElementaryOp::row_swap(m, i, j))) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("column operations") {
  std::mt19937 rng(321);
  Complex a = random_complex(rng);
  // 2x2 column addition: entry (i, j) = a, upper-triangular form
  Matrix got = eval(diagram_for(ElementaryOp::col_add(1, 0, a, 1)));
  CHECK(got(0, 0) == Complex{1, 0});
  CHECK(std::abs(got(0, 1) - a) <= 1e-12);
  CHECK(got(1, 0) == Complex{0, 0});
  for (int m = 1; m <= 3; ++m) {
    const long dim = 1L << m;
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) {
        if (i == j) continue;
        ElementaryOp op = ElementaryOp::col_add(m, i, random_complex(rng), j);
        CHECK(max_abs_diff(eval(diagram_for(op)), oracle_matrix(op)) <= 1e-12);
      }
    }
  }
  // column Mul and Swap coincide with their row counterparts
  ElementaryOp cm = ElementaryOp::col_mul(2, 3, a);
  CHECK(max_abs_diff(oracle_matrix(cm),
                     oracle_matrix(ElementaryOp::row_mul(2, 3, a))) == 0);
  CHECK(max_abs_diff(eval(diagram_for(cm)), oracle_matrix(cm)) <= 1e-12);
}

TEST_CASE("proposition suite: inverses") {
  std::mt19937 rng(99);
  const int m = 2;
  const long dim = 1L << m;
  const Matrix id = Matrix::Identity(dim, dim);
  for (long i = 0; i < dim; ++i) {
    Complex a = random_complex(rng);
    if (std::abs(a) < 0.1) a += Complex{1, 0};
    // 1: R_{i x a} R_{i x 1/a} = I, both orders
    Matrix f = eval(diagram_mul(m, i, a));
    Matrix g = eval(diagram_mul(m, i, Complex{1, 0} / a));
    CHECK(max_abs_diff(f * g, id) <= 1e-12);
    CHECK(max_abs_diff(g * f, id) <= 1e-12);
    for (long j = 0; j < dim; ++j) {
      if (i == j) continue;
      // 2: R_{i x a + j} R_{i x (-a) + j} = I
      Matrix p = eval(diagram_add(m, i, a, j));
      Matrix q = eval(diagram_add(m, i, -a, j));
      CHECK(max_abs_diff(p * q, id) <= 1e-12);
      CHECK(max_abs_diff(q * p, id) <= 1e-12);
      // 3: the switch is an involution
      Matrix s = eval(diagram_swap(m, i, j));
      CHECK(max_abs_diff(s * s, id) <= 1e-12);
    }
  }
}

TEST_CASE("proposition suite: transposes") {
  std::mt19937 rng(100);
  const int m = 2;
  const long dim = 1L << m;
  for (long i = 0; i < dim; ++i) {
    Complex a = random_complex(rng);
    // 4: multiplication diagrams are symmetric
    Matrix f = eval(diagram_mul(m, i, a));
    CHECK(max_abs_diff(f.transpose(), f) <= 1e-12);
    for (long j = 0; j < dim; ++j) {
      if (i == j) continue;
      // 5: R_{i x a + j}^T = R_{j x a + i}
      CHECK(max_abs_diff(eval(diagram_add(m, i, a, j)).transpose(),
                         eval(diagram_add(m, j, a, i))) <= 1e-12);
      // 6: switches are symmetric
      Matrix s = eval(diagram_swap(m, i, j));
      CHECK(max_abs_diff(s.transpose(), s) <= 1e-12);
    }
  }
}

TEST_CASE("proposition suite: composition laws") {
  std::mt19937 rng(101);
  const int m = 2;
  const long dim = 1L << m;
  for (long i = 0; i < dim; ++i) {
    Complex a = random_complex(rng), b = random_complex(rng);
    // 7: R_{i x a} R_{i x b} = R_{i x ab}
    CHECK(max_abs_diff(eval(diagram_mul(m, i, a)) * eval(diagram_mul(m, i, b)),
                       eval(diagram_mul(m, i, a * b))) <= 1e-12);
    for (long j = 0; j < dim; ++j) {
      if (i == j) continue;
      // 8: R_{i x a + j} R_{i x b + j} = R_{i x (a+b) + j}
      CHECK(max_abs_diff(
                eval(diagram_add(m, i, a, j)) * eval(diagram_add(m, i, b, j)),
                eval(diagram_add(m, i, a + b, j))) <= 1e-12);
    }
  }
}

TEST_CASE("op validation and inverses") {
  CHECK_THROWS_AS(ElementaryOp::row_mul(2, 4, {1, 0}), InvalidOp);
  CHECK_THROWS_AS(ElementaryOp::row_add(2, 1, {1, 0}, 1), InvalidOp);
  CHECK_THROWS_AS(ElementaryOp::row_swap(2, -1, 2), InvalidOp);
  CHECK_THROWS_AS(ElementaryOp::row_mul(0, 0, {1, 0}), InvalidOp);
  CHECK_THROWS_AS(diagram_add(2, 3, {1, 0}, 3), InvalidOp);
  CHECK_THROWS_AS(diagram_swap(2, 0, 4), InvalidOp);

  ElementaryOp mul = ElementaryOp::row_mul(2, 1, {2, 0});
  CHECK(mul.inverse().a == Complex{0.5, 0});
  CHECK_THROWS_AS(ElementaryOp::row_mul(2, 1, {0, 0}).inverse(), InvalidOp);
  ElementaryOp add = ElementaryOp::row_add(2, 0, {3, -1}, 2);
  CHECK(add.inverse().a == Complex{-3, 1});
  ElementaryOp sw = ElementaryOp::row_swap(2, 0, 3);
  CHECK(sw.inverse().i == 0);
  CHECK(sw.inverse().j == 3);
}

TEST_CASE("AND census matches the constructions") {
  // multiplication and addition use one AND with fan-in m
  AndCensus mul = and_census(diagram_mul(3, 5, {1, 0}));
  CHECK(mul.gates == 1);
  CHECK(mul.total_fan_in == 3);
  AndCensus add = and_census(diagram_add(3, 1, {2, 0}, 3));
  CHECK(add.gates == 1);
  CHECK(add.total_fan_in == 3);
  // the switch uses one AND with fan-in m - 1
  AndCensus sw = and_census(diagram_swap(3, 1, 7));
  CHECK(sw.gates == 1);
  CHECK(sw.total_fan_in == 2);
}
