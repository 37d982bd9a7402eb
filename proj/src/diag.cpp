// SPDX-License-Identifier: Apache-2.0

#include "patgen/diag.hpp"

#include <sstream>

namespace patgen {

std::string to_string(const Diagnostic& d) {
  std::ostringstream out;
  out << d.pos.line << ':' << d.pos.column << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << ": "
      << d.message;
  return out.str();
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  out << "workflow expression failed validation";
  for (const auto& d : diagnostics) out << "; " << to_string(d);
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace patgen
