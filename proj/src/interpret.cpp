#include "zxsynth/interpret.hpp"

#include <bit>
#include <string>

#include "zxsynth/errors.hpp"

namespace zxsynth {

namespace {

Eigen::Index dim(int wires) { return Eigen::Index{1} << wires; }

Matrix z_spider_matrix(int n, int m, Complex a) {
  Matrix out = Matrix::Zero(dim(m), dim(n));
  out(0, 0) += Complex{1, 0};
  out(dim(m) - 1, dim(n) - 1) += a;
  return out;
}

Matrix x_spider_matrix(int n, int m, bool phase_pi) {
  Matrix out = Matrix::Zero(dim(m), dim(n));
  const unsigned want = phase_pi ? 1u : 0u;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    const unsigned pr = std::popcount(static_cast<unsigned long long>(r)) & 1u;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      const unsigned pc =
          std::popcount(static_cast<unsigned long long>(c)) & 1u;
      if (((pr + pc) & 1u) == want) out(r, c) = Complex{1, 0};
    }
  }
  return out;
}

Matrix and_gate_matrix(int k) {
  Matrix out = Matrix::Zero(2, dim(k));
  for (Eigen::Index c = 0; c < out.cols(); ++c)
    out(c == out.cols() - 1 ? 1 : 0, c) = Complex{1, 0};
  return out;
}

Matrix interpret_node(const Diagram& d, const InterpretOptions& opts) {
  if (d.dom() + d.cod() > opts.max_wires) {
    throw SizeCapExceeded(
        "interpret: subterm with " + std::to_string(d.dom()) + " inputs and " +
        std::to_string(d.cod()) + " outputs exceeds the wire cap of " +
        std::to_string(opts.max_wires));
  }
  switch (d.tag()) {
    case Diagram::Tag::Gen:
      return generator_matrix(d.generator());
    case Diagram::Tag::Seq:
      return interpret_node(d.second(), opts) * interpret_node(d.first(), opts);
    case Diagram::Tag::Par:
      return kron(interpret_node(d.first(), opts),
                  interpret_node(d.second(), opts));
  }
  throw Error("interpret: malformed term");
}

}  // namespace

Matrix generator_matrix(const Generator& g) {
  switch (g.kind) {
    case GenKind::ZSpider:
      return z_spider_matrix(g.inputs, g.outputs, g.param);
    case GenKind::XSpider:
      return x_spider_matrix(g.inputs, g.outputs, g.phase_pi);
    case GenKind::Hadamard:
      return (Matrix(2, 2) << 1, 1, 1, -1).finished();
    case GenKind::Identity:
      return Matrix::Identity(2, 2);
    case GenKind::Swap:
      return (Matrix(4, 4) << 1, 0, 0, 0,
                              0, 0, 1, 0,
                              0, 1, 0, 0,
                              0, 0, 0, 1).finished();
    case GenKind::Cap:
      return (Matrix(4, 1) << 1, 0, 0, 1).finished();
    case GenKind::Cup:
      return (Matrix(1, 4) << 1, 0, 0, 1).finished();
    case GenKind::Triangle:
      return (Matrix(2, 2) << 1, 1, 0, 1).finished();
    case GenKind::TriangleInv:
      return (Matrix(2, 2) << 1, -1, 0, 1).finished();
    case GenKind::AndGate:
      return and_gate_matrix(g.inputs);
  }
  throw Error("generator_matrix: unknown generator");
}

Matrix interpret(const Diagram& d, const InterpretOptions& opts) {
  if (opts.max_wires < 0) throw InvalidOp("interpret: negative wire cap");
  Matrix out = interpret_node(d, opts);
  if (!out.allFinite()) throw Error("interpret: non-finite result");
  return out;
}

}  // namespace zxsynth
