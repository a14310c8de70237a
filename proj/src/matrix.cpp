#include "zxsynth/matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zxsynth/errors.hpp"

namespace zxsynth {

using nlohmann::json;

bool is_power_of_two(Eigen::Index x) { return x > 0 && (x & (x - 1)) == 0; }

int wire_count(Eigen::Index dim, const char* what) {
  if (!is_power_of_two(dim)) {
    throw ShapeMismatch(std::string(what) + ": dimension " +
                        std::to_string(dim) + " is not a power of two");
  }
  int w = 0;
  while ((Eigen::Index{1} << w) < dim) ++w;
  return w;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("max_abs_diff: shapes " + std::to_string(a.rows()) +
                        "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool matrices_close(const Matrix& a, const Matrix& b, double tol) {
  if (tol < 0) throw InvalidOp("matrices_close: negative tolerance");
  return max_abs_diff(a, b) <= tol;
}

double relative_frobenius_error(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("relative_frobenius_error: shape mismatch");
  }
  return (a - b).norm() / std::max(b.norm(), 1.0);
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw SchemaError("empty complex literal", "<complex>");

  // Split into signed terms at '+'/'-' not belonging to an exponent; a
  // trailing 'i'/'j' marks the imaginary term.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      terms.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  terms.push_back(s.substr(start));

  double re = 0.0, im = 0.0;
  for (std::string term : terms) {
    bool imaginary = false;
    if (!term.empty() && (term.back() == 'i' || term.back() == 'j')) {
      imaginary = true;
      term.pop_back();
      if (term.empty() || term == "+") term = "1";
      else if (term == "-") term = "-1";
    }
    try {
      std::size_t used = 0;
      double v = std::stod(term, &used);
      if (used != term.size()) throw std::invalid_argument(term);
      (imaginary ? im : re) += v;
    } catch (const std::exception&) {
      throw SchemaError("bad complex literal '" + text + "'", "<complex>");
    }
  }
  return {re, im};
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real();
  out << (z.imag() < 0 ? "-" : "+");
  out << std::abs(z.imag()) << "i";
  return out.str();
}

namespace {

Complex entry_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw SchemaError("matrix entry must be a number, [re, im] or 'a+bi'", path);
}

}  // namespace

Matrix matrix_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "$");
  }
  if (!j.is_array() || j.empty())
    throw SchemaError("matrix must be a non-empty 2-D array", "$");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw SchemaError("matrix rows must be non-empty arrays", "$[0]");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string rpath = "$[" + std::to_string(r) + "]";
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw SchemaError("ragged matrix row", rpath);
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = entry_from_json(j[r][c], rpath + "[" + std::to_string(c) + "]");
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
        throw SchemaError("non-finite matrix entry",
                          rpath + "[" + std::to_string(c) + "]");
    }
  }
  wire_count(rows, "matrix rows");
  wire_count(cols, "matrix cols");
  return m;
}

std::string matrix_to_json_text(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump(1);
}

Matrix matrix_from_csv_text(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Complex> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(parse_complex(field));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SchemaError("empty CSV matrix", "$");
  const auto cols = rows[0].size();
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw SchemaError("ragged CSV row", "$[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  wire_count(m.rows(), "matrix rows");
  wire_count(m.cols(), "matrix cols");
  return m;
}

std::string matrix_to_csv_text(const Matrix& m) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << format_complex(m(r, c));
    }
    out << "\n";
  }
  return out.str();
}

Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
    return matrix_from_csv_text(text);
  return matrix_from_json_text(text);
}

void save_matrix_file(const Matrix& m, const std::string& path,
                      const std::string& format) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file: " + path);
  if (format == "csv")
    out << matrix_to_csv_text(m);
  else
    out << matrix_to_json_text(m);
}

}  // namespace zxsynth
