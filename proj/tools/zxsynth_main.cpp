// zxsynth command line: synthesize matrices into diagrams, evaluate diagrams,
// verify the two against each other, build matchgate diagrams, export DOT.
//
// Exit codes: 0 ok, 1 verify mismatch, 2 parse/schema error,
// 3 synthesis self-check failure, 4 size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zxsynth/dot.hpp"
#include "zxsynth/elementary.hpp"
#include "zxsynth/errors.hpp"
#include "zxsynth/interpret.hpp"
#include "zxsynth/matchgate.hpp"
#include "zxsynth/matrix.hpp"
#include "zxsynth/serialize.hpp"
#include "zxsynth/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitSizeCap = 4;

zxsynth::InterpretOptions interpret_options() {
  zxsynth::InterpretOptions opts;
  if (const char* env = std::getenv("ZXSYNTH_MAX_WIRES")) {
    try {
      opts.max_wires = std::stoi(env);
    } catch (const std::exception&) {
      throw zxsynth::InvalidOp("ZXSYNTH_MAX_WIRES is not an integer");
    }
  }
  return opts;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw zxsynth::Error("cannot write file: " + path);
  out << text;
}

int cmd_synth(const std::string& matrix_path, const std::string& out_path,
              const std::string& plan_path, double tol, bool stop_at_rref) {
  const zxsynth::Matrix a = zxsynth::load_matrix_file(matrix_path);
  zxsynth::EliminateOptions opts;
  opts.normalize_pivots = !stop_at_rref;
  const zxsynth::SynthesisPlan plan = zxsynth::eliminate(a, opts);
  const zxsynth::Diagram d = zxsynth::plan_diagram(plan);

  const zxsynth::Matrix back = zxsynth::interpret(d, interpret_options());
  const double err = zxsynth::relative_frobenius_error(back, a);
  if (err > tol) {
    std::cerr << "self-check failed: relative Frobenius error " << err
              << " > tol " << tol << "\n";
    return kExitSelfCheck;
  }

  zxsynth::save_diagram_file(d, out_path);
  const std::string sidecar =
      plan_path.empty() ? out_path + ".plan.json" : plan_path;
  zxsynth::save_plan_file(plan, sidecar);
  std::cout << "rank " << plan.rank << ", " << plan.row_ops.size()
            << " row ops, " << plan.col_ops.size() << " col ops, self-check "
            << err << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& diagram_path, const std::string& out_path,
             const std::string& format) {
  const zxsynth::Diagram d = zxsynth::load_diagram_file(diagram_path);
  const zxsynth::Matrix m = zxsynth::interpret(d, interpret_options());
  if (out_path.empty()) {
    std::cout << zxsynth::matrix_to_json_text(m) << "\n";
  } else {
    zxsynth::save_matrix_file(m, out_path, format);
  }
  std::cout << "shape " << m.rows() << " x " << m.cols() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& diagram_path,
               double tol) {
  const zxsynth::Matrix a = zxsynth::load_matrix_file(matrix_path);
  const zxsynth::Diagram d = zxsynth::load_diagram_file(diagram_path);
  const zxsynth::Matrix m = zxsynth::interpret(d, interpret_options());
  if (m.rows() != a.rows() || m.cols() != a.cols()) {
    std::cerr << "shape mismatch: matrix " << a.rows() << " x " << a.cols()
              << ", diagram evaluates to " << m.rows() << " x " << m.cols()
              << "\n";
    return kExitMismatch;
  }
  const double max_err = zxsynth::max_abs_diff(m, a);
  const double frob_err = zxsynth::relative_frobenius_error(m, a);
  std::cout << "max-entry error " << max_err << ", relative Frobenius error "
            << frob_err << "\n";
  return frob_err <= tol ? kExitOk : kExitMismatch;
}

Eigen::Matrix2cd matrix2_from_json(const nlohmann::json& j,
                                   const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    throw zxsynth::SchemaError("expected a 2x2 matrix", path);
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2)
      throw zxsynth::SchemaError("expected a 2x2 matrix", path);
    for (int c = 0; c < 2; ++c) {
      const auto& e = j[r][c];
      if (e.is_number()) {
        m(r, c) = zxsynth::Complex{e.get<double>(), 0};
      } else if (e.is_string()) {
        m(r, c) = zxsynth::parse_complex(e.get<std::string>());
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw zxsynth::SchemaError("bad entry", path);
      }
    }
  }
  return m;
}

int cmd_matchgate(const std::vector<std::string>& entries,
                  const std::string& json_path, const std::string& out_path,
                  double tol) {
  zxsynth::MatchgateSpec spec;
  if (!json_path.empty()) {
    std::ifstream in(json_path);
    if (!in) throw zxsynth::Error("cannot open file: " + json_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw zxsynth::SchemaError(std::string("invalid JSON: ") + e.what(), "$");
    }
    if (!j.is_array() || j.size() != 2)
      throw zxsynth::SchemaError("expected [A, B] with 2x2 matrices", "$");
    spec.a = matrix2_from_json(j[0], "$[0]");
    spec.b = matrix2_from_json(j[1], "$[1]");
  } else {
    if (entries.size() != 8)
      throw zxsynth::SchemaError(
          "expected eight complex entries p q r s w x y z", "argv");
    spec.a << zxsynth::parse_complex(entries[0]),
        zxsynth::parse_complex(entries[1]), zxsynth::parse_complex(entries[2]),
        zxsynth::parse_complex(entries[3]);
    spec.b << zxsynth::parse_complex(entries[4]),
        zxsynth::parse_complex(entries[5]), zxsynth::parse_complex(entries[6]),
        zxsynth::parse_complex(entries[7]);
  }
  if (!spec.is_strict())
    std::cerr << "warning: det A != det B (not a strict matchgate)\n";

  const zxsynth::MatchgateSynthesis synth = zxsynth::matchgate_diagram(spec);
  const zxsynth::Matrix target = zxsynth::matchgate_matrix(spec);
  const zxsynth::Matrix back =
      zxsynth::interpret(synth.diagram, interpret_options());
  const double err = zxsynth::relative_frobenius_error(back, target);
  if (err > tol) {
    std::cerr << "self-check failed: relative Frobenius error " << err
              << " > tol " << tol << "\n";
    return kExitSelfCheck;
  }
  if (!out_path.empty()) zxsynth::save_diagram_file(synth.diagram, out_path);
  std::cout << (synth.used_fallback ? "fallback path" : "direct path")
            << ", self-check " << err << "\n";
  return kExitOk;
}

int cmd_export(const std::string& diagram_path, const std::string& out_path) {
  const zxsynth::Diagram d = zxsynth::load_diagram_file(diagram_path);
  const std::string dot = zxsynth::diagram_to_dot(d);
  if (out_path.empty())
    std::cout << dot;
  else
    write_text(out_path, dot);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZX-diagram synthesis for complex 2^m x 2^n matrices"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::string out, plan, format = "json";
  bool stop_at_rref = false;
  std::string matrix_path, diagram_path, json_path;
  std::vector<std::string> entries;

  auto* synth = app.add_subcommand("synth", "matrix file -> diagram + plan");
  synth->add_option("matrix", matrix_path, "input matrix (.json or .csv)")
      ->required();
  synth->add_option("--out", out, "output diagram file")->required();
  synth->add_option("--plan", plan, "sidecar plan file (default <out>.plan.json)");
  synth->add_option("--tol", tol, "self-check tolerance");
  synth->add_flag("--stop-at-rref", stop_at_rref,
                  "skip pivot normalization; pivots stay on the core diagonal");

  auto* eval = app.add_subcommand("eval", "diagram file -> matrix");
  eval->add_option("diagram", diagram_path, "input diagram file")->required();
  eval->add_option("--out", out, "output matrix file (default stdout)");
  eval->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "check a diagram against a matrix");
  verify->add_option("matrix", matrix_path, "matrix file")->required();
  verify->add_option("diagram", diagram_path, "diagram file")->required();
  verify->add_option("--tol", tol, "relative Frobenius tolerance");

  auto* matchgate = app.add_subcommand(
      "matchgate", "decompose G(A,B) given p q r s w x y z or a JSON pair");
  matchgate->add_option("entries", entries,
                        "eight complex entries: p q r s w x y z");
  matchgate->add_option("--json", json_path, "file holding [A, B]");
  matchgate->add_option("--out", out, "output diagram file");
  matchgate->add_option("--tol", tol, "self-check tolerance");

  auto* exp = app.add_subcommand("export", "diagram file -> GraphViz DOT");
  exp->add_option("diagram", diagram_path, "input diagram file")->required();
  exp->add_option("--out", out, "output .dot file (default stdout)");
  exp->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (tol <= 0) throw zxsynth::InvalidOp("--tol must be positive");
    if (synth->parsed())
      return cmd_synth(matrix_path, out, plan, tol, stop_at_rref);
    if (eval->parsed()) return cmd_eval(diagram_path, out, format);
    if (verify->parsed()) return cmd_verify(matrix_path, diagram_path, tol);
    if (matchgate->parsed()) return cmd_matchgate(entries, json_path, out, tol);
    if (exp->parsed()) return cmd_export(diagram_path, out);
  } catch (const zxsynth::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const zxsynth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
