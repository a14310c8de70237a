#include "zxsynth/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zxsynth/errors.hpp"

namespace zxsynth {

using nlohmann::json;

namespace {

json term_to_json(const Diagram& d) {
  switch (d.tag()) {
    case Diagram::Tag::Gen: {
      const Generator& g = d.generator();
      json out{{"kind", "gen"}, {"gen", gen_kind_name(g.kind)}};
      switch (g.kind) {
        case GenKind::ZSpider:
          out["ins"] = g.inputs;
          out["outs"] = g.outputs;
          out["a"] = {g.param.real(), g.param.imag()};
          break;
        case GenKind::XSpider:
          out["ins"] = g.inputs;
          out["outs"] = g.outputs;
          out["phase"] = g.phase_pi ? 1 : 0;
          break;
        case GenKind::AndGate:
          out["ins"] = g.inputs;
          break;
        default:
          break;
      }
      return out;
    }
    case Diagram::Tag::Seq:
      return json{{"kind", "seq"},
                  {"first", term_to_json(d.first())},
                  {"then", term_to_json(d.second())}};
    case Diagram::Tag::Par:
      return json{{"kind", "par"},
                  {"left", term_to_json(d.first())},
                  {"right", term_to_json(d.second())}};
  }
  throw Error("serialize: malformed term");
}

int int_field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw SchemaError(std::string("missing integer field '") + key + "'",
                      path);
  return j[key].get<int>();
}

Complex complex_field(const json& j, const char* key,
                      const std::string& path) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
      !j[key][0].is_number() || !j[key][1].is_number())
    throw SchemaError(std::string("field '") + key + "' must be [re, im]",
                      path);
  return {j[key][0].get<double>(), j[key][1].get<double>()};
}

Diagram term_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw SchemaError("term must be an object with a 'kind'", path);
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "seq") {
    Diagram f = term_from_json(j.value("first", json()), path + ".first");
    Diagram g = term_from_json(j.value("then", json()), path + ".then");
    if (f.cod() != g.dom())
      throw SchemaError("seq arity mismatch: cod " + std::to_string(f.cod()) +
                            " vs dom " + std::to_string(g.dom()),
                        path);
    return seq(f, g);
  }
  if (kind == "par") {
    Diagram f = term_from_json(j.value("left", json()), path + ".left");
    Diagram g = term_from_json(j.value("right", json()), path + ".right");
    return par(f, g);
  }
  if (kind != "gen") throw SchemaError("unknown term kind '" + kind + "'",
                                       path);

  if (!j.contains("gen") || !j["gen"].is_string())
    throw SchemaError("gen term needs a 'gen' name", path);
  const std::string name = j["gen"].get<std::string>();
  try {
    if (name == "Z")
      return Diagram::gen(Generator::z(int_field(j, "ins", path),
                                       int_field(j, "outs", path),
                                       complex_field(j, "a", path)));
    if (name == "X") {
      const int phase = int_field(j, "phase", path);
      if (phase != 0 && phase != 1)
        throw SchemaError("X phase must be 0 or 1 (units of pi)", path);
      return Diagram::gen(Generator::x(int_field(j, "ins", path),
                                       int_field(j, "outs", path),
                                       phase == 1));
    }
    if (name == "AND")
      return Diagram::gen(Generator::and_gate(int_field(j, "ins", path)));
    if (name == "H") return Diagram::gen(Generator::hadamard());
    if (name == "I") return Diagram::gen(Generator::identity());
    if (name == "SWAP") return Diagram::gen(Generator::wire_swap());
    if (name == "CAP") return Diagram::gen(Generator::cap());
    if (name == "CUP") return Diagram::gen(Generator::cup());
    if (name == "T") return Diagram::gen(Generator::triangle());
    if (name == "TINV") return Diagram::gen(Generator::triangle_inv());
  } catch (const InvalidOp& e) {
    throw SchemaError(e.what(), path);
  }
  throw SchemaError("unknown generator '" + name + "'", path);
}

}  // namespace

std::string serialize(const Diagram& d) {
  json out{{"version", kDiagramSchema},
           {"dom", d.dom()},
           {"cod", d.cod()},
           {"term", term_to_json(d)}};
  return out.dump(1);
}

Diagram deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
  }
  if (!j.is_object()) throw SchemaError("diagram file must be an object", "$");
  if (j.contains("version") && j["version"] != kDiagramSchema)
    throw SchemaError("unsupported schema version", "$.version");
  if (!j.contains("term")) throw SchemaError("missing 'term'", "$");
  Diagram d = term_from_json(j["term"], "$.term");
  if (j.contains("dom") && j["dom"].get<int>() != d.dom())
    throw SchemaError("stored dom does not match the term", "$.dom");
  if (j.contains("cod") && j["cod"].get<int>() != d.cod())
    throw SchemaError("stored cod does not match the term", "$.cod");
  return d;
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open diagram file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

void save_diagram_file(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write diagram file: " + path);
  out << serialize(d);
}

}  // namespace zxsynth
