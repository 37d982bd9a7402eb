// SPDX-License-Identifier: Apache-2.0

#include "patgen/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "patgen/generator.hpp"
#include "patgen/pattern.hpp"
#include "patgen/workflow.hpp"

namespace patgen {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void report(std::ostream& err, const std::string& file, const Diagnostic& d) {
  err << file << ':' << d.pos.line << ':' << d.pos.column << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << ": "
      << d.message << '\n';
}

void report(std::ostream& err, const std::string& file, const ParseError& e) {
  err << file << ':' << e.line() << ':' << e.column() << ": error: "
      << e.what() << '\n';
}

const char* verdict_name(CheckResult::Verdict verdict) {
  switch (verdict) {
    case CheckResult::Verdict::Satisfiable:
      return "satisfiable";
    case CheckResult::Verdict::Unsatisfiable:
      return "unsatisfiable";
    case CheckResult::Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

nlohmann::ordered_json provenance_json(const Provenance& origin) {
  nlohmann::ordered_json entry;
  entry["path"] = origin.path;
  nlohmann::ordered_json combination = nlohmann::ordered_json::object();
  for (const auto& [position, side] : origin.combination.binding) {
    combination[std::to_string(position)] =
        side == ExprSide::Ini ? "ini" : "fin";
  }
  entry["combination"] = std::move(combination);
  return entry;
}

int verdict_exit_code(const CheckResult& result) {
  switch (result.verdict) {
    case CheckResult::Verdict::Satisfiable:
      return 0;
    case CheckResult::Verdict::Unsatisfiable:
      return 2;
    case CheckResult::Verdict::Unknown:
      return 3;
  }
  return 3;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  // Front end: load and parse both inputs with file-anchored diagnostics.
  std::optional<PatternLibrary> lib;
  try {
    lib.emplace(load_pattern_library(config.patterns_path));
  } catch (const ParseError& e) {
    report(err, config.patterns_path, e);
    return 1;
  } catch (const Error& e) {
    err << "patgen: error: " << e.what() << '\n';
    return 1;
  }

  std::optional<WorkflowNode> model;
  try {
    model.emplace(parse_workflow(read_file(config.model_path)));
  } catch (const ParseError& e) {
    report(err, config.model_path, e);
    return 1;
  } catch (const Error& e) {
    err << "patgen: error: " << e.what() << '\n';
    return 1;
  }

  std::ofstream file_sink;
  if (config.output_path) {
    file_sink.open(*config.output_path, std::ios::binary);
    if (!file_sink) {
      err << "patgen: error: cannot open output file '" << *config.output_path
          << "'\n";
      return 1;
    }
  }
  std::ostream& sink = config.output_path ? file_sink : out;

  // Labeling is purely syntactic, so emitting the labeled expression does
  // not require the model to validate against the library unless a check
  // was requested as well.
  if (config.emit == EmitMode::Labeled && !config.check) {
    sink << label_expression(*model).to_string() << '\n';
    return 0;
  }

  std::vector<Diagnostic> findings =
      validate(*model, *lib, config.strict_atoms);
  for (const auto& finding : findings) {
    report(err, config.model_path, finding);
  }
  if (has_errors(findings)) return 1;

  Specification spec;
  try {
    GenerateOptions options;
    options.strict_atoms = config.strict_atoms;
    spec = generate(*model, *lib, options);
  } catch (const ValidationError& e) {
    for (const auto& finding : e.diagnostics()) {
      report(err, config.model_path, finding);
    }
    return 1;
  }

  std::optional<CheckResult> check;
  if (config.check) {
    if (spec.empty()) {
      err << "patgen: error: the generated specification is empty; nothing "
             "to check\n";
      return 1;
    }
    try {
      check = check_specification(spec, config.bounds);
    } catch (const BoundOverflowError& e) {
      err << "patgen: error: " << e.what() << '\n';
      return 1;
    }
  }

  switch (config.emit) {
    case EmitMode::Spec:
      for (const auto& f : spec.formulas()) {
        sink << print_formula(f) << '\n';
      }
      break;
    case EmitMode::Labeled:
      sink << label_expression(*model).to_string() << '\n';
      break;
    case EmitMode::Consolidated: {
      if (model->is_atomic()) {
        err << "patgen: error: consolidated expressions require a pattern "
               "application, got the atomic activity '"
            << model->name() << "'\n";
        return 1;
      }
      PropExpr ini = consolidated_expression(*model, ExprSide::Ini, *lib);
      PropExpr fin = consolidated_expression(*model, ExprSide::Fin, *lib);
      sink << "ini: " << print_formula(ini.formula()) << '\n';
      sink << "fin: " << print_formula(fin.formula()) << '\n';
      break;
    }
    case EmitMode::Json: {
      nlohmann::ordered_json doc;
      doc["formulas"] = nlohmann::ordered_json::array();
      for (const auto& f : spec.formulas()) {
        doc["formulas"].push_back(print_formula(f));
      }
      doc["provenance"] = nlohmann::ordered_json::array();
      for (const auto& origin : spec.provenance()) {
        doc["provenance"].push_back(provenance_json(origin));
      }
      doc["expression_labeled"] = label_expression(*model).to_string();
      if (check) {
        nlohmann::ordered_json check_json;
        check_json["verdict"] = verdict_name(check->verdict);
        if (check->witness) {
          check_json["witness"] = check->witness->to_string();
        } else {
          check_json["witness"] = nullptr;
        }
        check_json["exhaustive"] = check->exhaustive;
        check_json["bounds"] = {{"max_prefix", check->bounds.max_prefix},
                                {"max_loop", check->bounds.max_loop}};
        doc["check"] = std::move(check_json);
      }
      sink << doc.dump(2) << '\n';
      break;
    }
  }

  if (check && config.emit != EmitMode::Json) {
    sink << "check: " << verdict_name(check->verdict) << '\n';
    if (check->witness) {
      sink << "witness: " << check->witness->to_string() << '\n';
    }
  }
  return check ? verdict_exit_code(*check) : 0;
}

}  // namespace patgen
