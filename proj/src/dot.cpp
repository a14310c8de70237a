#include "zxsynth/dot.hpp"

#include <sstream>
#include <string>

#include "zxsynth/matrix.hpp"

namespace zxsynth {

namespace {

std::string gen_label(const Generator& g) {
  std::ostringstream out;
  switch (g.kind) {
    case GenKind::ZSpider:
      out << "Z(" << g.inputs << "->" << g.outputs << ", "
          << format_complex(g.param) << ")";
      break;
    case GenKind::XSpider:
      out << "X(" << g.inputs << "->" << g.outputs << ")"
          << (g.phase_pi ? " pi" : "");
      break;
    case GenKind::Hadamard: out << "H"; break;
    case GenKind::Identity: out << "I"; break;
    case GenKind::Swap: out << "SWAP"; break;
    case GenKind::Cap: out << "CAP"; break;
    case GenKind::Cup: out << "CUP"; break;
    case GenKind::Triangle: out << "T"; break;
    case GenKind::TriangleInv: out << "T-1"; break;
    case GenKind::AndGate: out << "AND(" << g.inputs << ")"; break;
  }
  return out.str();
}

const char* gen_color(const Generator& g) {
  switch (g.kind) {
    case GenKind::ZSpider: return "palegreen";
    case GenKind::XSpider: return "lightcoral";
    case GenKind::Hadamard: return "gold";
    case GenKind::AndGate: return "lightskyblue";
    default: return "white";
  }
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int emit(const Diagram& d, std::ostream& out, int& next_id) {
  const int id = next_id++;
  if (d.tag() == Diagram::Tag::Gen) {
    const Generator& g = d.generator();
    out << "  n" << id << " [shape=box, style=filled, fillcolor=\""
        << gen_color(g) << "\", label=\"" << escape(gen_label(g)) << "\"];\n";
    return id;
  }
  const bool is_seq = d.tag() == Diagram::Tag::Seq;
  out << "  n" << id << " [shape=circle, label=\"" << (is_seq ? ";" : "&#8855;")
      << "\"];\n";
  const int a = emit(d.first(), out, next_id);
  const int b = emit(d.second(), out, next_id);
  out << "  n" << id << " -> n" << a
      << (is_seq ? " [label=\"first\"];\n" : " [label=\"top\"];\n");
  out << "  n" << id << " -> n" << b
      << (is_seq ? " [label=\"then\"];\n" : " [label=\"bottom\"];\n");
  return id;
}

}  // namespace

std::string diagram_to_dot(const Diagram& d) {
  std::ostringstream out;
  out << "digraph diagram {\n";
  out << "  graph [label=\"" << d.dom() << " -> " << d.cod()
      << " wires\", labelloc=t];\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  int next_id = 0;
  emit(d, out, next_id);
  out << "}\n";
  return out.str();
}

}  // namespace zxsynth
