#pragma once

#include <stdexcept>
#include <string>

namespace zxsynth {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential composition with cod(first) != dom(then).
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Diagram or matrix file does not match the expected schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, std::string path)
      : Error(message + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Evaluation would exceed the configured wire cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes incompatible for the requested operation.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a constructor or operation (bad index, i == j, ...).
class InvalidOp : public Error {
 public:
  using Error::Error;
};

}  // namespace zxsynth
