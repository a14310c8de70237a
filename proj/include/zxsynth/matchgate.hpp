#pragma once

#include "zxsynth/diagram.hpp"
#include "zxsynth/matrix.hpp"

namespace zxsynth {

/// A two-qubit gate acting as A on span{|00>, |11|} and B on
/// span{|01>, |10>}. Entries: A = [[p, q], [r, s]], B = [[w, x], [y, z]].
struct MatchgateSpec {
  Eigen::Matrix2cd a;
  Eigen::Matrix2cd b;

  /// det A == det B within 1e-9 (the strict matchgate condition; the
  /// decomposition itself does not need it).
  bool is_strict() const;
};

/// The literal 4x4 matrix [[p,0,0,q],[0,w,x,0],[0,y,z,0],[r,0,0,s]].
Matrix matchgate_matrix(const MatchgateSpec& spec);

struct MatchgateSynthesis {
  Diagram diagram;
  /// True when p or w was too small for the direct decomposition and the
  /// generic elimination path was used instead.
  bool used_fallback = false;
};

/// 2 -> 2 diagram evaluating to matchgate_matrix(spec). Direct path (p, w
/// nonzero): row additions Add(0, r/p, 3) and Add(1, y/w, 2) after a
/// diagonal core, column additions with parameters x/w and q/p before it.
/// The core is Scalar(p) . diag(1, detB/(pw)) (x) diag(1, w/p), with one
/// extra multiplication on index 3 by detA/detB when the determinants
/// differ. Requires invertible A and B.
MatchgateSynthesis matchgate_diagram(const MatchgateSpec& spec);

}  // namespace zxsynth
