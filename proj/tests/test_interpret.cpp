#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zxsynth/errors.hpp"
#include "zxsynth/interpret.hpp"
#include "zxsynth/matrix.hpp"

using namespace zxsynth;

namespace {

Matrix eval(const Diagram& d) { return interpret(d); }

Diagram random_diagram(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  if (depth == 0 || pick(rng) == 0) {
    switch (pick(rng)) {
      case 0: return Diagram::gen(Generator::hadamard());
      case 1: return Diagram::gen(Generator::triangle());
      case 2: return Diagram::gen(Generator::x(1, 1, true));
      case 3: return Diagram::gen(Generator::z(1, 1, {val(rng), val(rng)}));
      case 4: return Diagram::gen(Generator::triangle_inv());
      default: return Diagram::gen(Generator::identity());
    }
  }
  Diagram a = random_diagram(rng, depth - 1);
  Diagram b = random_diagram(rng, depth - 1);
  if (pick(rng) % 2 && a.cod() == b.dom()) return seq(a, b);
  return par(a, b);
}

}  // namespace

TEST_CASE("frozen generator matrices") {
  // Z spider 1 -> 1 with label a is diag(1, a)
  Matrix z = generator_matrix(Generator::z(1, 1, {2, 1}));
  CHECK(z(0, 0) == Complex{1, 0});
  CHECK(z(0, 1) == Complex{0, 0});
  CHECK(z(1, 0) == Complex{0, 0});
  CHECK(z(1, 1) == Complex{2, 1});

  // scalar Z spider: 1 + a
  Matrix s = generator_matrix(Generator::z(0, 0, {2.5, 0}));
  CHECK(s.rows() == 1);
  CHECK(s(0, 0) == Complex{3.5, 0});

  Matrix h = generator_matrix(Generator::hadamard());
  Matrix h_ref(2, 2);
  h_ref << 1, 1, 1, -1;
  CHECK(max_abs_diff(h, h_ref) == 0);

  Matrix t = generator_matrix(Generator::triangle());
  Matrix t_ref(2, 2);
  t_ref << 1, 1, 0, 1;
  CHECK(max_abs_diff(t, t_ref) == 0);

  Matrix ti = generator_matrix(Generator::triangle_inv());
  Matrix ti_ref(2, 2);
  ti_ref << 1, -1, 0, 1;
  CHECK(max_abs_diff(ti, ti_ref) == 0);

  // X spider 1 -> 1 with pi phase is NOT
  Matrix nt = generator_matrix(Generator::x(1, 1, true));
  Matrix nt_ref(2, 2);
  nt_ref << 0, 1, 1, 0;
  CHECK(max_abs_diff(nt, nt_ref) == 0);

  // X spider 2 -> 1 phase 0 is XOR
  Matrix xr = generator_matrix(Generator::x(2, 1, false));
  Matrix xr_ref(2, 4);
  xr_ref << 1, 0, 0, 1, 0, 1, 1, 0;
  CHECK(max_abs_diff(xr, xr_ref) == 0);

  Matrix cap = generator_matrix(Generator::cap());
  CHECK(cap.rows() == 4);
  CHECK(cap.cols() == 1);
  CHECK(cap(0, 0) == Complex{1, 0});
  CHECK(cap(1, 0) == Complex{0, 0});
  CHECK(cap(2, 0) == Complex{0, 0});
  CHECK(cap(3, 0) == Complex{1, 0});

  Matrix cup = generator_matrix(Generator::cup());
  CHECK(cup.rows() == 1);
  CHECK(cup.cols() == 4);

  Matrix sw = generator_matrix(Generator::wire_swap());
  Matrix sw_ref = Matrix::Zero(4, 4);
  sw_ref(0, 0) = sw_ref(1, 2) = sw_ref(2, 1) = sw_ref(3, 3) = 1;
  CHECK(max_abs_diff(sw, sw_ref) == 0);
}

TEST_CASE("copy spider duplicates basis states") {
  Matrix c = eval(Diagram::gen(Generator::z(1, 2, {1, 0})));
  Matrix ref = Matrix::Zero(4, 2);
  ref(0, 0) = 1;
  ref(3, 1) = 1;
  CHECK(max_abs_diff(c, ref) == 0);
}

TEST_CASE("AND gate matrix") {
  Matrix a3 = generator_matrix(Generator::and_gate(3));
  CHECK(a3.rows() == 2);
  CHECK(a3.cols() == 8);
  for (int j = 0; j < 8; ++j) {
    CHECK(a3(0, j) == (j == 7 ? Complex{0, 0} : Complex{1, 0}));
    CHECK(a3(1, j) == (j == 7 ? Complex{1, 0} : Complex{0, 0}));
  }
  // AND(0) is the |1> state, AND(1) the identity
  CHECK(max_abs_diff(generator_matrix(Generator::and_gate(1)),
                     Matrix::Identity(2, 2)) == 0);
  Matrix a0 = generator_matrix(Generator::and_gate(0));
  CHECK(a0(0, 0) == Complex{0, 0});
  CHECK(a0(1, 0) == Complex{1, 0});
  // the macro expansion computes the same map
  CHECK(max_abs_diff(eval(expand_macro(DerivedMacro::and_gate(3))), a3) ==
        doctest::Approx(0));
}

TEST_CASE("macro matrices") {
  Matrix k0 = eval(ket_zero());
  CHECK(k0(0, 0) == Complex{1, 0});
  CHECK(k0(1, 0) == Complex{0, 0});
  Matrix k1 = eval(ket_one());
  CHECK(k1(0, 0) == Complex{0, 0});
  CHECK(k1(1, 0) == Complex{1, 0});
  Matrix b1 = eval(bra_one());
  CHECK(b1(0, 0) == Complex{0, 0});
  CHECK(b1(0, 1) == Complex{1, 0});
  Matrix sc = eval(scalar_diagram({0.5, -2}));
  CHECK(sc(0, 0) == Complex{0.5, -2});
}

TEST_CASE("H squared is 2I and triangles invert") {
  Diagram h = Diagram::gen(Generator::hadamard());
  CHECK(max_abs_diff(eval(seq(h, h)), 2 * Matrix::Identity(2, 2)) == 0);
  Diagram t = Diagram::gen(Generator::triangle());
  Diagram ti = Diagram::gen(Generator::triangle_inv());
  CHECK(max_abs_diff(eval(seq(t, ti)), Matrix::Identity(2, 2)) == 0);
}

TEST_CASE("snake identity: bent wire is the identity") {
  Diagram id1 = identity_wires(1);
  Diagram cap = Diagram::gen(Generator::cap());
  Diagram cup = Diagram::gen(Generator::cup());
  // (id (x) cup) . (cap (x) id): 1 -> 3 -> 1
  Diagram snake = seq(par(cap, id1), par(id1, cup));
  CHECK(max_abs_diff(eval(snake), Matrix::Identity(2, 2)) == 0);
  Diagram snake2 = seq(par(id1, cap), par(cup, id1));
  CHECK(max_abs_diff(eval(snake2), Matrix::Identity(2, 2)) == 0);
}

TEST_CASE("basis indexing: top wire is the most significant bit") {
  // |1> (x) |0> = e_2 in a 2-wire system
  Matrix v = eval(par(ket_one(), ket_zero()));
  CHECK(v.rows() == 4);
  CHECK(v(2, 0) == Complex{1, 0});
  CHECK(v.cwiseAbs().sum() == 1.0);
  // exhaustive pin for m <= 4
  for (int m = 1; m <= 4; ++m) {
    for (long idx = 0; idx < (1L << m); ++idx) {
      std::vector<Diagram> bits;
      for (int k = m - 1; k >= 0; --k)
        bits.push_back(((idx >> k) & 1) ? ket_one() : ket_zero());
      Matrix col = eval(par_all(bits));
      for (long r = 0; r < (1L << m); ++r)
        CHECK(col(r, 0) == (r == idx ? Complex{1, 0} : Complex{0, 0}));
    }
  }
}

TEST_CASE("functoriality properties on random terms") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Diagram f = random_diagram(rng, 3);
    Diagram g = random_diagram(rng, 3);
    // 1 -> 1 leaves and balanced composition keep everything composable
    if (f.dom() + f.cod() + g.dom() + g.cod() > 16) continue;  // stay cheap
    if (f.cod() == g.dom()) {
      CHECK(max_abs_diff(eval(seq(f, g)), eval(g) * eval(f)) <= 1e-10);
    }
    CHECK(max_abs_diff(eval(par(f, g)), kron(eval(f), eval(g))) <= 1e-10);
  }
}

TEST_CASE("permutation diagrams act on basis indices") {
  // reverse 3 wires: bit-reversal permutation on indices
  Matrix p = eval(permutation({2, 1, 0}));
  for (long c = 0; c < 8; ++c) {
    long rev = ((c & 1) << 2) | (c & 2) | ((c >> 2) & 1);
    for (long r = 0; r < 8; ++r)
      CHECK(p(r, c) == (r == rev ? Complex{1, 0} : Complex{0, 0}));
  }
}

TEST_CASE("size cap") {
  Diagram wide = identity_wires(3);
  InterpretOptions opts;
  opts.max_wires = 4;
  CHECK_THROWS_AS(interpret(wide, opts), SizeCapExceeded);
  opts.max_wires = 6;
  CHECK(interpret(wide, opts).rows() == 8);
  // the default cap rejects a single over-wide generator up front
  Diagram huge = Diagram::gen(Generator::z(20, 20, {1, 0}));
  CHECK_THROWS_AS(interpret(huge), SizeCapExceeded);
}

TEST_CASE("matrix helpers") {
  Matrix a = Matrix::Identity(2, 2);
  Matrix b = a;
  b(1, 1) += 1e-13;
  CHECK(matrices_close(a, b, 1e-12));
  CHECK_FALSE(matrices_close(a, b, 1e-14));
  CHECK_THROWS_AS(matrices_close(a, Matrix::Identity(4, 4), 1e-12),
                  ShapeMismatch);
  CHECK_THROWS_AS(matrices_close(a, b, -1.0), InvalidOp);
  CHECK(wire_count(8, "test") == 3);
  CHECK_THROWS_AS(wire_count(6, "test"), ShapeMismatch);
  CHECK(relative_frobenius_error(a, a) == 0);
}
