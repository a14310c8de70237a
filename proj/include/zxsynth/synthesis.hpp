#pragma once

#include <string>
#include <vector>

#include "zxsynth/diagram.hpp"
#include "zxsynth/elementary.hpp"
#include "zxsynth/matrix.hpp"

namespace zxsynth {

inline constexpr const char* kPlanSchema = "zxsynth-plan/1";

/// Ordered elementary operations that bring a 2^m x 2^n matrix to the
/// standard form [E_r 0; 0 0]. row_ops apply on the left and col_ops on the
/// right, both in recorded order. core_diag holds the r leading diagonal
/// entries of the reduced core (all ones when pivots were normalized).
struct SynthesisPlan {
  int m = 0;
  int n = 0;
  long rank = 0;
  double pivot_tolerance = 0.0;
  std::vector<ElementaryOp> row_ops;
  std::vector<ElementaryOp> col_ops;
  std::vector<Complex> core_diag;
};

struct EliminateOptions {
  double tol = 1e-10;
  /// When false, pivots are left unscaled (the shortcut exposed on the CLI
  /// as --stop-at-rref) and their values land in core_diag.
  bool normalize_pivots = true;
};

/// Gaussian elimination recording every elementary operation. The current
/// diagonal entry is kept as pivot whenever it is non-negligible; otherwise
/// the largest remaining entry is swapped in. Recorded Mul ops always have
/// |a| above tol times the largest input entry.
SynthesisPlan eliminate(const Matrix& a, const EliminateOptions& opts = {});
SynthesisPlan eliminate(const Matrix& a, double tol);

/// Apply the plan's ops around a copy of the input: returns
/// row_ops * a * col_ops (each side in recorded order), which should equal
/// the reduced core.
Matrix apply_plan(const SynthesisPlan& plan, Matrix a);

/// The standard-form matrix [E_r 0; 0 0] itself, as a reference.
Matrix standard_form_matrix(int m, int n, long r);

/// n -> m diagram evaluating to [E_r 0; 0 0]: a tensor of |0> states or <0|
/// effects bridging the wire-count gap with zero-multiplications on every
/// row index at or above r.
Diagram standard_form_diagram(int m, int n, long r);

/// Rebuild the input matrix as a diagram: inverted column ops on the input
/// side, the (possibly scaled) standard-form core, inverted row ops on the
/// output side.
Diagram plan_diagram(const SynthesisPlan& plan);

/// eliminate + plan_diagram.
Diagram synthesize(const Matrix& a, const EliminateOptions& opts = {});
Diagram synthesize(const Matrix& a, double tol);

std::string plan_to_json_text(const SynthesisPlan& plan);
SynthesisPlan plan_from_json_text(const std::string& text);
void save_plan_file(const SynthesisPlan& plan, const std::string& path);
SynthesisPlan load_plan_file(const std::string& path);

}  // namespace zxsynth
