#pragma once

#include "zxsynth/diagram.hpp"
#include "zxsynth/matrix.hpp"

namespace zxsynth {

enum class OpKind { Mul, Add, Swap };
enum class OpSide { Row, Column };

/// One elementary operation on a 2^m x 2^m matrix. Rows are numbered
/// 0..2^m-1. Mul scales row i by a; Add adds a times row i to row j;
/// Swap exchanges rows i and j. Column-side ops are the right-multiplication
/// counterparts (transpose-consistent matrices).
struct ElementaryOp {
  OpKind kind = OpKind::Mul;
  OpSide side = OpSide::Row;
  int m = 1;
  long i = 0;
  long j = 0;
  Complex a{0, 0};

  static ElementaryOp row_mul(int m, long i, Complex a);
  static ElementaryOp row_add(int m, long i, Complex a, long j);
  static ElementaryOp row_swap(int m, long i, long j);
  static ElementaryOp col_mul(int m, long i, Complex a);
  static ElementaryOp col_add(int m, long i, Complex a, long j);
  static ElementaryOp col_swap(int m, long i, long j);

  /// Mul(i,a) -> Mul(i,1/a) (throws InvalidOp when a == 0),
  /// Add(i,a,j) -> Add(i,-a,j), Swap is its own inverse.
  ElementaryOp inverse() const;

  void validate() const;
};

/// The literal elementary matrix. Row side: identity except (i,i)=a for Mul,
/// identity plus (j,i)=a for Add, rows i and j exchanged for Swap. Column
/// side returns the transpose (the right-multiplication form).
Matrix oracle_matrix(const ElementaryOp& op);

/// Diagram on m wires whose interpretation scales basis state |i> by a.
/// Built from per-wire copy spiders, NOT gates on the complemented bits of
/// i, an m-input AND, and the <0| + a<1| effect on the AND output.
Diagram diagram_mul(int m, long i, Complex a);

/// Diagram on m wires sending |i> to |i> + a|j> and fixing the other basis
/// states. The AND-matched control passes through Triangle and a scaling
/// spider, then fans out to XOR nodes on the bits where i and j differ.
Diagram diagram_add(int m, long i, Complex a, long j);

/// Diagram on m wires exchanging |i> and |j>. The AND gate has m-1 inputs:
/// bit-equality checks on the wires where i and j agree and parity checks
/// pairing the lowest differing wire with each other differing wire.
Diagram diagram_swap(int m, long i, long j);

/// Dispatch on kind and side. Column Mul/Swap reuse the row diagram;
/// Column Add builds the row diagram with source and target exchanged.
/// Callers compose column-op diagrams on the input side.
Diagram diagram_for(const ElementaryOp& op);

/// Number of AndGate leaves and their total fan-in, for structural checks.
struct AndCensus {
  int gates = 0;
  int total_fan_in = 0;
};
AndCensus and_census(const Diagram& d);

}  // namespace zxsynth
