#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>

#include "zxsynth/diagram.hpp"

namespace zxsynth {

/// Dense complex matrix of shape 2^m x 2^n. Row/column counts are validated
/// as powers of two at the I/O boundaries.
using Matrix = Eigen::MatrixXcd;

bool is_power_of_two(Eigen::Index x);

/// log2 of a power-of-two dimension; throws ShapeMismatch otherwise.
int wire_count(Eigen::Index dim, const char* what);

Matrix kron(const Matrix& a, const Matrix& b);

/// Max-entry absolute difference <= tol. Throws ShapeMismatch on different
/// shapes, InvalidOp on negative tol.
bool matrices_close(const Matrix& a, const Matrix& b, double tol);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// ||a - b||_F / max(||b||_F, 1).
double relative_frobenius_error(const Matrix& a, const Matrix& b);

/// Parse "1.5-0.5i" style complex literals (also plain reals, "i", "-i").
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

// Matrix file formats: JSON as a 2-D array of [re, im] pairs (entries may
// also be "a+bi" strings), CSV as rows of "a+bi" fields.
Matrix matrix_from_json_text(const std::string& text);
std::string matrix_to_json_text(const Matrix& m);
Matrix matrix_from_csv_text(const std::string& text);
std::string matrix_to_csv_text(const Matrix& m);

Matrix load_matrix_file(const std::string& path);
void save_matrix_file(const Matrix& m, const std::string& path,
                      const std::string& format = "json");

}  // namespace zxsynth
