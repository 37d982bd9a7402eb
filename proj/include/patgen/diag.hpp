// SPDX-License-Identifier: Apache-2.0
//
// Shared diagnostic types: source positions, parse errors, validation
// findings.  Every diagnostic produced by a file-reading front end carries a
// 1-based line and column.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patgen {

struct SourcePos {
  int line = 0;    // 1-based; 0 = unknown
  int column = 0;  // 1-based; 0 = unknown

  bool operator==(const SourcePos& other) const noexcept {
    return line == other.line && column == other.column;
  }
};

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a formula, workflow expression, or pattern file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourcePos pos)
      : Error(message), pos_(pos) {}

  const SourcePos& pos() const noexcept { return pos_; }
  int line() const noexcept { return pos_.line; }
  int column() const noexcept { return pos_.column; }

 private:
  SourcePos pos_;
};

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourcePos pos;
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

std::string to_string(const Diagnostic& d);

// Raised when an operation is handed a workflow expression that fails
// validation; carries the findings.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Raised when a satisfiability search cannot cover the requested bounds
// within the configured resource ceiling.
class BoundOverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace patgen
