#pragma once

#include "zxsynth/diagram.hpp"
#include "zxsynth/matrix.hpp"

namespace zxsynth {

struct InterpretOptions {
  /// Max dom + cod allowed on any subterm. Overridable per call and via
  /// the ZXSYNTH_MAX_WIRES environment variable in the CLI.
  int max_wires = 24;
};

/// The standard interpretation: a diagram with n inputs and m outputs maps
/// to a 2^m x 2^n complex matrix. Sequential composition multiplies
/// (later factor on the left), parallel composition takes the Kronecker
/// product with the top block as the more significant factor, so the basis
/// state with top-to-bottom bits (a_{m-1}, ..., a_0) is the unit column
/// e_{sum a_i 2^i}.
Matrix interpret(const Diagram& d, const InterpretOptions& opts = {});

/// Matrix of a single generator.
Matrix generator_matrix(const Generator& g);

}  // namespace zxsynth
