#include "zxsynth/elementary.hpp"

#include <bit>
#include <string>
#include <vector>

#include "zxsynth/errors.hpp"

namespace zxsynth {

namespace {

int bit(long v, int k) { return static_cast<int>((v >> k) & 1); }

void check_index(int m, long idx, const char* what) {
  if (m < 1 || m > 30) throw InvalidOp(std::string(what) + ": bad wire count");
  if (idx < 0 || idx >= (1L << m)) {
    throw InvalidOp(std::string(what) + ": index " + std::to_string(idx) +
                    " out of range for m = " + std::to_string(m));
  }
}

/// Bits where i and j differ, most significant first.
std::vector<int> differing_bits_desc(int m, long i, long j) {
  std::vector<int> bits;
  for (int k = m - 1; k >= 0; --k)
    if (bit(i ^ j, k)) bits.push_back(k);
  return bits;
}

Diagram z_copy(int branches) {
  return Diagram::gen(Generator::z(1, 1 + branches, {1, 0}));
}

/// Copy every wire once and route the branches below the through wires:
/// m -> 2m, order [out_{m-1} .. out_0, br_{m-1} .. br_0].
Diagram copy_all_wires(int m) {
  std::vector<Diagram> copies(m, z_copy(1));
  Diagram d = par_all(copies);
  std::vector<int> out_pos(2 * m);
  for (int t = 0; t < m; ++t) {
    out_pos[2 * t] = t;          // through wire
    out_pos[2 * t + 1] = m + t;  // copy branch
  }
  return seq(d, permutation(out_pos));
}

/// m -> m+1: keeps the m wires and appends a control bit at the bottom that
/// is 1 exactly on the basis state |pattern>.
Diagram match_control(int m, long pattern) {
  Diagram d = copy_all_wires(m);
  std::vector<Diagram> tests;
  tests.reserve(m);
  for (int k = m - 1; k >= 0; --k) {
    tests.push_back(bit(pattern, k) ? identity_wires(1) : not_gate());
  }
  d = seq(d, par(identity_wires(m), par_all(tests)));
  return seq(d, par(identity_wires(m),
                    Diagram::gen(Generator::and_gate(m))));
}

/// (m + s) -> m: wires [outs, s control branches at the bottom]; XORs the
/// x-th branch into the wire for targets_desc[x].
Diagram route_and_xor(int m, const std::vector<int>& targets_desc) {
  const int s = static_cast<int>(targets_desc.size());
  std::vector<int> out_pos(m + s);
  std::vector<bool> is_target(m, false);
  for (int k : targets_desc) is_target[k] = true;
  int pos = 0;
  std::vector<int> target_slot(m, -1);
  for (int k = m - 1; k >= 0; --k) {
    out_pos[m - 1 - k] = pos++;
    if (is_target[k]) target_slot[k] = pos++;
  }
  for (int x = 0; x < s; ++x) out_pos[m + x] = target_slot[targets_desc[x]];

  std::vector<Diagram> blocks;
  for (int k = m - 1; k >= 0; --k) {
    blocks.push_back(is_target[k] ? Diagram::gen(Generator::x(2, 1, false))
                                  : identity_wires(1));
  }
  return seq(permutation(out_pos), par_all(blocks));
}

}  // namespace

ElementaryOp ElementaryOp::row_mul(int m, long i, Complex a) {
  ElementaryOp op{OpKind::Mul, OpSide::Row, m, i, 0, a};
  op.validate();
  return op;
}
ElementaryOp ElementaryOp::row_add(int m, long i, Complex a, long j) {
  ElementaryOp op{OpKind::Add, OpSide::Row, m, i, j, a};
  op.validate();
  return op;
}
ElementaryOp ElementaryOp::row_swap(int m, long i, long j) {
  ElementaryOp op{OpKind::Swap, OpSide::Row, m, i, j, {0, 0}};
  op.validate();
  return op;
}
ElementaryOp ElementaryOp::col_mul(int m, long i, Complex a) {
  ElementaryOp op = row_mul(m, i, a);
  op.side = OpSide::Column;
  return op;
}
ElementaryOp ElementaryOp::col_add(int m, long i, Complex a, long j) {
  ElementaryOp op = row_add(m, i, a, j);
  op.side = OpSide::Column;
  return op;
}
ElementaryOp ElementaryOp::col_swap(int m, long i, long j) {
  ElementaryOp op = row_swap(m, i, j);
  op.side = OpSide::Column;
  return op;
}

void ElementaryOp::validate() const {
  check_index(m, i, "ElementaryOp");
  if (kind != OpKind::Mul) {
    check_index(m, j, "ElementaryOp");
    if (i == j) throw InvalidOp("ElementaryOp: i and j must differ");
  }
}

ElementaryOp ElementaryOp::inverse() const {
  ElementaryOp inv = *this;
  switch (kind) {
    case OpKind::Mul:
      if (a == Complex{0, 0})
        throw InvalidOp("ElementaryOp: Mul with a = 0 has no inverse");
      inv.a = Complex{1, 0} / a;
      break;
    case OpKind::Add:
      inv.a = -a;
      break;
    case OpKind::Swap:
      break;
  }
  return inv;
}

Matrix oracle_matrix(const ElementaryOp& op) {
  op.validate();
  const Eigen::Index dim = Eigen::Index{1} << op.m;
  Matrix out = Matrix::Identity(dim, dim);
  switch (op.kind) {
    case OpKind::Mul:
      out(op.i, op.i) = op.a;
      break;
    case OpKind::Add:
      if (op.side == OpSide::Row)
        out(op.j, op.i) = op.a;
      else
        out(op.i, op.j) = op.a;
      break;
    case OpKind::Swap:
      out(op.i, op.i) = 0;
      out(op.j, op.j) = 0;
      out(op.i, op.j) = 1;
      out(op.j, op.i) = 1;
      break;
  }
  return out;
}

Diagram diagram_mul(int m, long i, Complex a) {
  check_index(m, i, "diagram_mul");
  Diagram d = match_control(m, i);
  return seq(d, par(identity_wires(m), Diagram::gen(Generator::z(1, 0, a))));
}

Diagram diagram_add(int m, long i, Complex a, long j) {
  check_index(m, i, "diagram_add");
  check_index(m, j, "diagram_add");
  if (i == j) throw InvalidOp("diagram_add: i and j must differ");
  const std::vector<int> targets = differing_bits_desc(m, i, j);
  const int s = static_cast<int>(targets.size());

  Diagram d = match_control(m, i);
  // |0> -> |0>, |1> -> |0> + a|1>
  Diagram gate = seq(Diagram::gen(Generator::triangle()),
                     Diagram::gen(Generator::z(1, 1, a)));
  d = seq(d, par(identity_wires(m), gate));
  d = seq(d, par(identity_wires(m),
                 Diagram::gen(Generator::z(1, s, {1, 0}))));
  return seq(d, route_and_xor(m, targets));
}

Diagram diagram_swap(int m, long i, long j) {
  check_index(m, i, "diagram_swap");
  check_index(m, j, "diagram_swap");
  if (i == j) throw InvalidOp("diagram_swap: i and j must differ");
  const std::vector<int> targets = differing_bits_desc(m, i, j);
  const int s = static_cast<int>(targets.size());
  const int low = targets.back();  // least significant differing bit

  // Copy branches: one per agreeing wire (equality check), one per other
  // differing wire, s-1 on the lowest differing wire (one per parity pair).
  std::vector<int> branches(m, 1);
  branches[low] = s - 1;
  std::vector<Diagram> copies;
  for (int k = m - 1; k >= 0; --k) {
    copies.push_back(branches[k] == 0 ? identity_wires(1)
                                      : z_copy(branches[k]));
  }
  Diagram d = par_all(copies);

  // Current order: for k desc, out_k then its branches. Route to
  // [outs, equality-check branches (agreeing bits, desc), parity pairs
  // (low branch, other branch) for each other differing bit, desc]. The
  // loop visits the other differing bits in the same descending order the
  // pairs use, so pair x gets slots pair_slot + 2x and pair_slot + 2x + 1.
  std::vector<bool> differs(m, false);
  for (int k : targets) differs[k] = true;

  std::vector<int> out_pos(m + (m - s) + 2 * (s - 1));
  int eq_slot = m;
  const int pair_slot = m + (m - s);
  int pair_index = 0;
  int p = 0;
  for (int k = m - 1; k >= 0; --k) {
    out_pos[p++] = m - 1 - k;  // through wire keeps rank order
    for (int b = 0; b < branches[k]; ++b) {
      if (!differs[k]) {
        out_pos[p++] = eq_slot++;
      } else if (k == low) {
        out_pos[p++] = pair_slot + 2 * b;
      } else {
        out_pos[p++] = pair_slot + 2 * pair_index + 1;
        ++pair_index;
      }
    }
  }
  d = seq(d, permutation(out_pos));

  // Checks: NOT on complemented agreeing bits, XOR-compare on parity pairs.
  std::vector<Diagram> checks;
  for (int k = m - 1; k >= 0; --k) {
    if (!differs[k]) checks.push_back(bit(i, k) ? identity_wires(1)
                                                : not_gate());
  }
  for (int x = 0; x < s - 1; ++x) {
    const int other = targets[x];  // differing bits above the lowest, desc
    const bool flip = (bit(i, low) ^ bit(i, other)) == 0;
    checks.push_back(Diagram::gen(Generator::x(2, 1, flip)));
  }
  if (!checks.empty()) {
    d = seq(d, par(identity_wires(m), par_all(checks)));
  }
  d = seq(d, par(identity_wires(m),
                 Diagram::gen(Generator::and_gate(m - 1))));
  d = seq(d, par(identity_wires(m),
                 Diagram::gen(Generator::z(1, s, {1, 0}))));
  return seq(d, route_and_xor(m, targets));
}

Diagram diagram_for(const ElementaryOp& op) {
  op.validate();
  switch (op.kind) {
    case OpKind::Mul:
      return diagram_mul(op.m, op.i, op.a);
    case OpKind::Add:
      return op.side == OpSide::Row ? diagram_add(op.m, op.i, op.a, op.j)
                                    : diagram_add(op.m, op.j, op.a, op.i);
    case OpKind::Swap:
      return diagram_swap(op.m, op.i, op.j);
  }
  throw InvalidOp("diagram_for: unknown op kind");
}

AndCensus and_census(const Diagram& d) {
  AndCensus census;
  if (d.tag() == Diagram::Tag::Gen) {
    if (d.generator().kind == GenKind::AndGate) {
      ++census.gates;
      census.total_fan_in += d.generator().inputs;
    }
    return census;
  }
  const AndCensus a = and_census(d.first());
  const AndCensus b = and_census(d.second());
  census.gates = a.gates + b.gates;
  census.total_fan_in = a.total_fan_in + b.total_fan_in;
  return census;
}

}  // namespace zxsynth
