// SPDX-License-Identifier: Apache-2.0
//
// The `patgen` command-line front end, exposed as a library function so the
// whole pipeline is testable in-process.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "patgen/checker.hpp"

namespace patgen {

enum class EmitMode { Spec, Labeled, Consolidated, Json };

struct RunConfig {
  std::string patterns_path;
  std::string model_path;
  EmitMode emit = EmitMode::Spec;
  bool check = false;
  bool strict_atoms = true;
  SearchBounds bounds;
  std::optional<std::string> output_path;  // stdout when absent
};

// Exit codes: 0 success, 1 validation/syntax/I-O error, 2 the checked
// specification is unsatisfiable, 3 the check result is unknown within the
// given bounds.  Diagnostics go to `err` as `file:line:col: severity: msg`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace patgen
