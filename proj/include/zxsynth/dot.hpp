#pragma once

#include <string>

#include "zxsynth/diagram.hpp"

namespace zxsynth {

/// Graphviz rendering of the composition tree. Generator leaves are filled
/// boxes (green Z spiders, red X spiders, yellow H) with arities and
/// parameters in the label; seq/par nodes are plain circles.
std::string diagram_to_dot(const Diagram& d);

}  // namespace zxsynth
