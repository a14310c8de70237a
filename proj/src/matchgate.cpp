#include "zxsynth/matchgate.hpp"

#include <cmath>

#include "zxsynth/elementary.hpp"
#include "zxsynth/errors.hpp"
#include "zxsynth/synthesis.hpp"

namespace zxsynth {

bool MatchgateSpec::is_strict() const {
  return std::abs(a.determinant() - b.determinant()) <= 1e-9;
}

Matrix matchgate_matrix(const MatchgateSpec& spec) {
  Matrix g = Matrix::Zero(4, 4);
  g(0, 0) = spec.a(0, 0);
  g(0, 3) = spec.a(0, 1);
  g(3, 0) = spec.a(1, 0);
  g(3, 3) = spec.a(1, 1);
  g(1, 1) = spec.b(0, 0);
  g(1, 2) = spec.b(0, 1);
  g(2, 1) = spec.b(1, 0);
  g(2, 2) = spec.b(1, 1);
  return g;
}

MatchgateSynthesis matchgate_diagram(const MatchgateSpec& spec) {
  const Complex det_a = spec.a.determinant();
  const Complex det_b = spec.b.determinant();
  const double scale =
      std::max(spec.a.cwiseAbs().maxCoeff(), spec.b.cwiseAbs().maxCoeff());
  if (std::abs(det_a) <= 1e-12 * scale * scale ||
      std::abs(det_b) <= 1e-12 * scale * scale)
    throw InvalidOp("matchgate_diagram: A and B must be invertible");

  const Complex p = spec.a(0, 0), q = spec.a(0, 1), r = spec.a(1, 0);
  const Complex w = spec.b(0, 0), x = spec.b(0, 1), y = spec.b(1, 0);

  if (std::abs(p) <= 1e-6 * scale || std::abs(w) <= 1e-6 * scale) {
    // Corner entries too small for stable ratios; eliminate the full 4x4.
    return {synthesize(matchgate_matrix(spec)), true};
  }

  // Reduced diagonal: diag(p, w, detB/w, detA/p). Factor it as
  // p * diag(1, alpha) (x) diag(1, beta) with a residual scaling gamma on
  // index 3 that is 1 exactly when det A == det B.
  const Complex alpha = det_b / (p * w);
  const Complex beta = w / p;
  const Complex gamma = det_a / det_b;

  Diagram core = par(scalar_diagram(p),
                     par(Diagram::gen(Generator::z(1, 1, alpha)),
                         Diagram::gen(Generator::z(1, 1, beta))));
  if (gamma != Complex{1, 0}) core = seq(core, diagram_mul(2, 3, gamma));

  Diagram d = seq(diagram_add(2, 3, q / p, 0), core);   // column Add(0,q/p,3)
  d = seq(diagram_add(2, 2, x / w, 1), d);              // column Add(1,x/w,2)
  d = seq(d, diagram_add(2, 1, y / w, 2));              // row Add(1,y/w,2)
  d = seq(d, diagram_add(2, 0, r / p, 3));              // row Add(0,r/p,3)
  return {d, false};
}

}  // namespace zxsynth
