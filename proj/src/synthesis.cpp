#include "zxsynth/synthesis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zxsynth/errors.hpp"

namespace zxsynth {

using nlohmann::json;

SynthesisPlan eliminate(const Matrix& a, const EliminateOptions& opts) {
  if (opts.tol <= 0) throw InvalidOp("eliminate: tol must be positive");
  const int m = wire_count(a.rows(), "eliminate rows");
  const int n = wire_count(a.cols(), "eliminate cols");

  SynthesisPlan plan;
  plan.m = m;
  plan.n = n;
  plan.pivot_tolerance = opts.tol;

  Matrix work = a;
  const double scale = work.cwiseAbs().maxCoeff();
  const double threshold = opts.tol * std::max(scale, 1e-300);
  const long rows = work.rows(), cols = work.cols();
  const long max_rank = std::min(rows, cols);

  auto record_row = [&](const ElementaryOp& op) {
    plan.row_ops.push_back(op);
    work = oracle_matrix(op) * work;
  };
  auto record_col = [&](const ElementaryOp& op) {
    plan.col_ops.push_back(op);
    work = work * oracle_matrix(op);
  };

  long t = 0;
  for (; t < max_rank; ++t) {
    // Keep the diagonal entry when usable; otherwise swap in the largest
    // remaining entry so a near-zero corner never becomes the pivot.
    long pi = t, pj = t;
    if (std::abs(work(t, t)) <= threshold) {
      double best = 0.0;
      for (long r = t; r < rows; ++r) {
        for (long c = t; c < cols; ++c) {
          if (std::abs(work(r, c)) > best) {
            best = std::abs(work(r, c));
            pi = r;
            pj = c;
          }
        }
      }
      if (best <= threshold) break;  // rank found
    }
    if (pi != t) record_row(ElementaryOp::row_swap(m, t, pi));
    if (pj != t) record_col(ElementaryOp::col_swap(n, t, pj));

    const Complex pivot = work(t, t);
    if (opts.normalize_pivots) {
      if (pivot != Complex{1, 0})
        record_row(ElementaryOp::row_mul(m, t, Complex{1, 0} / pivot));
      plan.core_diag.push_back(Complex{1, 0});
    } else {
      plan.core_diag.push_back(pivot);
    }
    const Complex lead = work(t, t);
    for (long r = 0; r < rows; ++r) {
      if (r == t || std::abs(work(r, t)) == 0.0) continue;
      record_row(ElementaryOp::row_add(m, t, -work(r, t) / lead, r));
      work(r, t) = 0;  // clear residual rounding
    }
    for (long c = 0; c < cols; ++c) {
      if (c == t || std::abs(work(t, c)) == 0.0) continue;
      record_col(ElementaryOp::col_add(n, t, -work(t, c) / lead, c));
      work(t, c) = 0;
    }
  }
  plan.rank = t;
  return plan;
}

SynthesisPlan eliminate(const Matrix& a, double tol) {
  EliminateOptions opts;
  opts.tol = tol;
  return eliminate(a, opts);
}

Matrix apply_plan(const SynthesisPlan& plan, Matrix a) {
  for (const ElementaryOp& op : plan.row_ops) a = oracle_matrix(op) * a;
  for (const ElementaryOp& op : plan.col_ops) a = a * oracle_matrix(op);
  return a;
}

Matrix standard_form_matrix(int m, int n, long r) {
  Matrix out = Matrix::Zero(Eigen::Index{1} << m, Eigen::Index{1} << n);
  for (long k = 0; k < r; ++k) out(k, k) = 1;
  return out;
}

Diagram standard_form_diagram(int m, int n, long r) {
  if (m < 1 || n < 1) throw InvalidOp("standard_form_diagram: bad wire count");
  const long core_dim = Eigen::Index{1} << std::min(m, n);
  if (r < 0 || r > core_dim)
    throw InvalidOp("standard_form_diagram: rank " + std::to_string(r) +
                    " out of range for shape 2^" + std::to_string(m) + " x 2^" +
                    std::to_string(n));
  const int k = std::min(m, n);
  Diagram core = identity_wires(k);
  for (long idx = r; idx < core_dim; ++idx)
    core = seq(core, diagram_mul(k, idx, {0, 0}));
  if (m == n) return core;
  if (m < n) {
    // wide: <0| effects on the n-m most significant input wires
    std::vector<Diagram> effects(n - m, bra_zero());
    return par(par_all(effects), core);
  }
  // tall: |0> states on the m-n most significant output wires
  std::vector<Diagram> states(m - n, ket_zero());
  return par(par_all(states), core);
}

Diagram plan_diagram(const SynthesisPlan& plan) {
  Diagram d = standard_form_diagram(plan.m, plan.n, plan.rank);
  // Unnormalized pivots re-enter as extra scalings on the core diagonal.
  for (long idx = 0; idx < static_cast<long>(plan.core_diag.size()); ++idx) {
    if (plan.core_diag[idx] != Complex{1, 0})
      d = seq(d, diagram_mul(plan.m, idx, plan.core_diag[idx]));
  }
  // Column ops: inverted on the input side. The first recorded op must run
  // first (A = ... core Ck^-1 ... C1^-1), so prepend in reverse order.
  for (auto it = plan.col_ops.rbegin(); it != plan.col_ops.rend(); ++it) {
    d = seq(diagram_for(it->inverse()), d);
  }
  // Row ops: reverse recorded order, inverted, on the output side.
  for (auto it = plan.row_ops.rbegin(); it != plan.row_ops.rend(); ++it) {
    d = seq(d, diagram_for(it->inverse()));
  }
  return d;
}

Diagram synthesize(const Matrix& a, const EliminateOptions& opts) {
  return plan_diagram(eliminate(a, opts));
}

Diagram synthesize(const Matrix& a, double tol) {
  EliminateOptions opts;
  opts.tol = tol;
  return synthesize(a, opts);
}

namespace {

json op_to_json(const ElementaryOp& op) {
  json out;
  switch (op.kind) {
    case OpKind::Mul: out["kind"] = "mul"; break;
    case OpKind::Add: out["kind"] = "add"; break;
    case OpKind::Swap: out["kind"] = "swap"; break;
  }
  out["side"] = op.side == OpSide::Row ? "row" : "col";
  out["m"] = op.m;
  out["i"] = op.i;
  if (op.kind != OpKind::Mul) out["j"] = op.j;
  if (op.kind != OpKind::Swap) out["a"] = {op.a.real(), op.a.imag()};
  return out;
}

ElementaryOp op_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("op must be an object", path);
  const std::string kind = j.value("kind", "");
  const std::string side = j.value("side", "row");
  if (side != "row" && side != "col")
    throw SchemaError("side must be 'row' or 'col'", path);
  const int m = j.value("m", 0);
  const long i = j.value("i", -1L);
  const long jj = j.value("j", -1L);
  Complex a{0, 0};
  if (j.contains("a")) {
    if (!j["a"].is_array() || j["a"].size() != 2)
      throw SchemaError("'a' must be [re, im]", path);
    a = {j["a"][0].get<double>(), j["a"][1].get<double>()};
  }
  try {
    if (kind == "mul")
      return side == "row" ? ElementaryOp::row_mul(m, i, a)
                           : ElementaryOp::col_mul(m, i, a);
    if (kind == "add")
      return side == "row" ? ElementaryOp::row_add(m, i, a, jj)
                           : ElementaryOp::col_add(m, i, a, jj);
    if (kind == "swap")
      return side == "row" ? ElementaryOp::row_swap(m, i, jj)
                           : ElementaryOp::col_swap(m, i, jj);
  } catch (const InvalidOp& e) {
    throw SchemaError(e.what(), path);
  }
  throw SchemaError("unknown op kind '" + kind + "'", path);
}

}  // namespace

std::string plan_to_json_text(const SynthesisPlan& plan) {
  json out{{"version", kPlanSchema},
           {"m", plan.m},
           {"n", plan.n},
           {"rank", plan.rank},
           {"pivot_tolerance", plan.pivot_tolerance}};
  json rows = json::array(), cols = json::array(), diag = json::array();
  for (const auto& op : plan.row_ops) rows.push_back(op_to_json(op));
  for (const auto& op : plan.col_ops) cols.push_back(op_to_json(op));
  for (const auto& v : plan.core_diag) diag.push_back({v.real(), v.imag()});
  out["row_ops"] = std::move(rows);
  out["col_ops"] = std::move(cols);
  out["core_diag"] = std::move(diag);
  return out.dump(1);
}

SynthesisPlan plan_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
  }
  if (!j.is_object()) throw SchemaError("plan must be an object", "$");
  if (j.contains("version") && j["version"] != kPlanSchema)
    throw SchemaError("unsupported schema version", "$.version");
  SynthesisPlan plan;
  plan.m = j.value("m", 0);
  plan.n = j.value("n", 0);
  plan.rank = j.value("rank", 0L);
  plan.pivot_tolerance = j.value("pivot_tolerance", 0.0);
  if (plan.m < 1 || plan.n < 1) throw SchemaError("bad m/n", "$");
  for (std::size_t k = 0; k < j.value("row_ops", json::array()).size(); ++k)
    plan.row_ops.push_back(
        op_from_json(j["row_ops"][k], "$.row_ops[" + std::to_string(k) + "]"));
  for (std::size_t k = 0; k < j.value("col_ops", json::array()).size(); ++k)
    plan.col_ops.push_back(
        op_from_json(j["col_ops"][k], "$.col_ops[" + std::to_string(k) + "]"));
  for (const auto& v : j.value("core_diag", json::array()))
    plan.core_diag.push_back({v[0].get<double>(), v[1].get<double>()});
  return plan;
}

void save_plan_file(const SynthesisPlan& plan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write plan file: " + path);
  out << plan_to_json_text(plan);
}

SynthesisPlan load_plan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open plan file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return plan_from_json_text(buf.str());
}

}  // namespace zxsynth
