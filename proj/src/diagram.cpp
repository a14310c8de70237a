#include "zxsynth/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zxsynth/errors.hpp"

namespace zxsynth {

namespace {

void check_arity(int inputs, int outputs, const char* what) {
  if (inputs < 0 || outputs < 0) {
    throw InvalidOp(std::string(what) + ": arities must be nonnegative");
  }
}

}  // namespace

Generator Generator::z(int inputs, int outputs, Complex a) {
  check_arity(inputs, outputs, "ZSpider");
  return {GenKind::ZSpider, inputs, outputs, a, false};
}

Generator Generator::x(int inputs, int outputs, bool phase_pi) {
  check_arity(inputs, outputs, "XSpider");
  return {GenKind::XSpider, inputs, outputs, {0, 0}, phase_pi};
}

Generator Generator::hadamard() { return {GenKind::Hadamard, 1, 1}; }
Generator Generator::identity() { return {GenKind::Identity, 1, 1}; }
Generator Generator::wire_swap() { return {GenKind::Swap, 2, 2}; }
Generator Generator::cap() { return {GenKind::Cap, 0, 2}; }
Generator Generator::cup() { return {GenKind::Cup, 2, 0}; }
Generator Generator::triangle() { return {GenKind::Triangle, 1, 1}; }
Generator Generator::triangle_inv() { return {GenKind::TriangleInv, 1, 1}; }

Generator Generator::and_gate(int fan_in) {
  if (fan_in < 0) throw InvalidOp("AndGate: fan-in must be nonnegative");
  return {GenKind::AndGate, fan_in, 1};
}

bool Generator::operator==(const Generator& other) const {
  if (kind != other.kind || inputs != other.inputs || outputs != other.outputs)
    return false;
  switch (kind) {
    case GenKind::ZSpider:
      return param == other.param;
    case GenKind::XSpider:
      return phase_pi == other.phase_pi;
    default:
      return true;
  }
}

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::ZSpider: return "Z";
    case GenKind::XSpider: return "X";
    case GenKind::Hadamard: return "H";
    case GenKind::Identity: return "I";
    case GenKind::Swap: return "SWAP";
    case GenKind::Cap: return "CAP";
    case GenKind::Cup: return "CUP";
    case GenKind::Triangle: return "T";
    case GenKind::TriangleInv: return "TINV";
    case GenKind::AndGate: return "AND";
  }
  return "?";
}

Diagram Diagram::gen(const Generator& g) {
  auto node = std::make_shared<Node>();
  node->tag = Tag::Gen;
  node->g = g;
  node->dom = g.inputs;
  node->cod = g.outputs;
  return Diagram(std::move(node));
}

const Generator& Diagram::generator() const {
  if (node_->tag != Tag::Gen) throw InvalidOp("generator(): not a leaf node");
  return node_->g;
}

const Diagram& Diagram::first() const {
  if (node_->tag == Tag::Gen) throw InvalidOp("first(): leaf node");
  return node_->children[0];
}

const Diagram& Diagram::second() const {
  if (node_->tag == Tag::Gen) throw InvalidOp("second(): leaf node");
  return node_->children[1];
}

std::size_t Diagram::node_count() const {
  if (node_->tag == Tag::Gen) return 1;
  return 1 + first().node_count() + second().node_count();
}

bool Diagram::operator==(const Diagram& other) const {
  if (node_ == other.node_) return true;
  if (node_->tag != other.node_->tag) return false;
  if (dom() != other.dom() || cod() != other.cod()) return false;
  if (node_->tag == Tag::Gen) return node_->g == other.node_->g;
  return first() == other.first() && second() == other.second();
}

Diagram seq(const Diagram& f, const Diagram& g) {
  if (f.cod() != g.dom()) {
    throw ArityMismatch("seq: cod(first) = " + std::to_string(f.cod()) +
                        " does not match dom(then) = " +
                        std::to_string(g.dom()));
  }
  auto node = std::make_shared<Diagram::Node>();
  node->tag = Diagram::Tag::Seq;
  node->children = {f, g};
  node->dom = f.dom();
  node->cod = g.cod();
  return Diagram(std::move(node));
}

Diagram par(const Diagram& f, const Diagram& g) {
  auto node = std::make_shared<Diagram::Node>();
  node->tag = Diagram::Tag::Par;
  node->children = {f, g};
  node->dom = f.dom() + g.dom();
  node->cod = f.cod() + g.cod();
  return Diagram(std::move(node));
}

Diagram identity_wires(int n) {
  if (n < 0) throw InvalidOp("identity_wires: negative wire count");
  if (n == 0) return Diagram::gen(Generator::z(0, 0, {0, 0}));  // scalar 1
  Diagram d = Diagram::gen(Generator::identity());
  for (int i = 1; i < n; ++i) d = par(d, Diagram::gen(Generator::identity()));
  return d;
}

Diagram par_all(const std::vector<Diagram>& blocks) {
  if (blocks.empty()) return identity_wires(0);
  Diagram d = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) d = par(d, blocks[i]);
  return d;
}

Diagram seq_all(const std::vector<Diagram>& stages) {
  if (stages.empty()) throw InvalidOp("seq_all: empty pipeline");
  Diagram d = stages.front();
  for (std::size_t i = 1; i < stages.size(); ++i) d = seq(d, stages[i]);
  return d;
}

Diagram permutation(const std::vector<int>& out_pos) {
  const int n = static_cast<int>(out_pos.size());
  std::vector<bool> seen(n, false);
  for (int p : out_pos) {
    if (p < 0 || p >= n || seen[p])
      throw InvalidOp("permutation: out_pos is not a permutation");
    seen[p] = true;
  }
  // current[slot] = input wire occupying that slot; bubble each wire to its
  // target slot with adjacent swaps.
  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  Diagram d = identity_wires(n);
  bool moved = true;
  bool any = false;
  while (moved) {
    moved = false;
    for (int s = 0; s + 1 < n; ++s) {
      if (out_pos[current[s]] > out_pos[current[s + 1]]) {
        std::swap(current[s], current[s + 1]);
        Diagram layer =
            par_all({identity_wires(s), Diagram::gen(Generator::wire_swap()),
                     identity_wires(n - s - 2)});
        d = any ? seq(d, layer) : layer;
        any = true;
        moved = true;
      }
    }
  }
  return d;
}

Diagram expand_macro(const DerivedMacro& m) {
  using Kind = DerivedMacro::Kind;
  switch (m.kind) {
    case Kind::NotGate:
      return Diagram::gen(Generator::x(1, 1, true));
    case Kind::AndGate: {
      const int k = m.fan_in;
      if (k < 0) throw InvalidOp("AndGate: fan-in must be nonnegative");
      std::vector<Diagram> triangles(k, Diagram::gen(Generator::triangle()));
      Diagram d = par_all(triangles);
      d = seq(d, Diagram::gen(Generator::z(k, 1, {1, 0})));
      return seq(d, Diagram::gen(Generator::triangle_inv()));
    }
    case Kind::KetZero:
      return Diagram::gen(Generator::z(0, 1, {0, 0}));
    case Kind::BraZero:
      return Diagram::gen(Generator::z(1, 0, {0, 0}));
    case Kind::KetOne:
      return seq(expand_macro(DerivedMacro::ket_zero()),
                 expand_macro(DerivedMacro::not_gate()));
    case Kind::BraOne:
      return seq(expand_macro(DerivedMacro::not_gate()),
                 expand_macro(DerivedMacro::bra_zero()));
    case Kind::Scalar:
      return Diagram::gen(Generator::z(0, 0, m.value - Complex{1, 0}));
  }
  throw InvalidOp("expand_macro: unknown macro");
}

Diagram not_gate() { return expand_macro(DerivedMacro::not_gate()); }
Diagram ket_zero() { return expand_macro(DerivedMacro::ket_zero()); }
Diagram bra_zero() { return expand_macro(DerivedMacro::bra_zero()); }
Diagram ket_one() { return expand_macro(DerivedMacro::ket_one()); }
Diagram bra_one() { return expand_macro(DerivedMacro::bra_one()); }
Diagram scalar_diagram(Complex a) {
  return expand_macro(DerivedMacro::scalar(a));
}

}  // namespace zxsynth
