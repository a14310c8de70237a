#pragma once

#include <string>

#include "zxsynth/diagram.hpp"

namespace zxsynth {

/// Schema identifier written into every diagram file.
inline constexpr const char* kDiagramSchema = "zxsynth-diagram/1";

/// JSON text for a diagram: {"version", "dom", "cod", "term"} with nested
/// term objects of kind "gen" | "seq" | "par". Complex parameters are
/// [re, im] pairs and round-trip bit exactly.
std::string serialize(const Diagram& d);

/// Inverse of serialize. Throws SchemaError (with a JSON-path location) on
/// malformed input, including seq nodes with mismatched arities.
Diagram deserialize(const std::string& text);

Diagram load_diagram_file(const std::string& path);
void save_diagram_file(const Diagram& d, const std::string& path);

}  // namespace zxsynth
