#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace zxsynth {

using Complex = std::complex<double>;

enum class GenKind {
  ZSpider,      // labelled green spider, n -> m, complex label a
  XSpider,      // red (parity) spider, n -> m, phase in {0, pi}
  Hadamard,     // 1 -> 1, [[1,1],[1,-1]]
  Identity,     // 1 -> 1
  Swap,         // 2 -> 2
  Cap,          // 0 -> 2
  Cup,          // 2 -> 0
  Triangle,     // 1 -> 1, [[1,1],[0,1]]
  TriangleInv,  // 1 -> 1, [[1,-1],[0,1]]
  AndGate,      // k -> 1 conjunction of basis bits (derived node)
};

/// One leaf of the diagram term algebra. Arities are fixed for every kind
/// except ZSpider, XSpider and AndGate.
struct Generator {
  GenKind kind = GenKind::Identity;
  int inputs = 1;
  int outputs = 1;
  Complex param{1.0, 0.0};  // ZSpider label
  bool phase_pi = false;    // XSpider phase

  static Generator z(int inputs, int outputs, Complex a);
  static Generator x(int inputs, int outputs, bool phase_pi = false);
  static Generator hadamard();
  static Generator identity();
  static Generator wire_swap();
  static Generator cap();
  static Generator cup();
  static Generator triangle();
  static Generator triangle_inv();
  static Generator and_gate(int fan_in);

  bool operator==(const Generator& other) const;
};

const char* gen_kind_name(GenKind kind);

/// An immutable composition tree over the generator set. Seq and Par nodes
/// cache their wire counts; leaves carry a Generator. Values are cheap to
/// copy (shared structure) and safe to share between threads.
class Diagram {
 public:
  enum class Tag { Gen, Seq, Par };

  static Diagram gen(const Generator& g);

  Tag tag() const { return node_->tag; }
  int dom() const { return node_->dom; }
  int cod() const { return node_->cod; }

  const Generator& generator() const;  // Tag::Gen only
  const Diagram& first() const;        // Seq: runs first; Par: top block
  const Diagram& second() const;       // Seq: runs second; Par: bottom block

  std::size_t node_count() const;

  /// Structural equality on terms, exact on complex parameters.
  bool operator==(const Diagram& other) const;
  bool operator!=(const Diagram& other) const { return !(*this == other); }

 private:
  struct Node {
    Tag tag = Tag::Gen;
    Generator g;
    std::vector<Diagram> children;  // two entries for Seq/Par, empty for Gen
    int dom = 0, cod = 0;
  };
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Diagram seq(const Diagram&, const Diagram&);
  friend Diagram par(const Diagram&, const Diagram&);
};

/// Sequential composition: f then g. Throws ArityMismatch unless
/// cod(f) == dom(g).
Diagram seq(const Diagram& f, const Diagram& g);

/// Parallel (tensor) composition with f on top. The top block carries the
/// more significant bits of the basis index.
Diagram par(const Diagram& f, const Diagram& g);

/// n parallel identity wires; n == 0 gives the empty (scalar 1) diagram.
Diagram identity_wires(int n);

/// Tensor a list of blocks top to bottom. Empty list gives the empty diagram.
Diagram par_all(const std::vector<Diagram>& blocks);

/// Compose a pipeline left to right (first element runs first).
Diagram seq_all(const std::vector<Diagram>& stages);

/// Wire permutation built from adjacent swaps: input wire p (0 = top) exits
/// at position out_pos[p]. out_pos must be a permutation of 0..n-1.
Diagram permutation(const std::vector<int>& out_pos);

/// Derived macros over the generator set.
struct DerivedMacro {
  enum class Kind { NotGate, AndGate, KetZero, BraZero, KetOne, BraOne, Scalar };
  Kind kind;
  int fan_in = 0;         // AndGate
  Complex value{1.0, 0};  // Scalar

  static DerivedMacro not_gate() { return {Kind::NotGate}; }
  static DerivedMacro and_gate(int fan_in) { return {Kind::AndGate, fan_in}; }
  static DerivedMacro ket_zero() { return {Kind::KetZero}; }
  static DerivedMacro bra_zero() { return {Kind::BraZero}; }
  static DerivedMacro ket_one() { return {Kind::KetOne}; }
  static DerivedMacro bra_one() { return {Kind::BraOne}; }
  static DerivedMacro scalar(Complex a) { return {Kind::Scalar, 0, a}; }
};

/// Expand a macro into a diagram over the raw generator set. The AND gate
/// expands as TriangleInv . Z(k->1, 1) . Triangle^(tensor k), which sends
/// |b1..bk> to |b1 & ... & bk|; the AndGate generator node computes the same
/// matrix directly and is what the elementary constructions emit.
Diagram expand_macro(const DerivedMacro& m);

// Shorthand for common one-node diagrams.
Diagram not_gate();
Diagram ket_zero();
Diagram bra_zero();
Diagram ket_one();
Diagram bra_one();
Diagram scalar_diagram(Complex a);

}  // namespace zxsynth
