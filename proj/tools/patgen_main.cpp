// SPDX-License-Identifier: Apache-2.0
//
// patgen: compile workflow expressions into temporal-logic specifications
// and check them for satisfiability over bounded lasso models.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "patgen/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "patgen - workflow pattern compiler: expands nested pattern "
      "applications into temporal-logic specifications and checks them over "
      "bounded lasso models"};

  patgen::RunConfig config;
  std::string emit = "spec";
  std::string output;

  app.add_option("-p,--patterns", config.patterns_path,
                 "Pattern library file (.p)")
      ->envname("PATGEN_PATTERNS")
      ->required();
  app.add_option("-m,--model", config.model_path,
                 "Workflow expression file")
      ->required();
  app.add_option("-e,--emit", emit,
                 "What to print: the generated specification, the "
                 "bracket-labeled expression, the consolidated ini/fin "
                 "expressions, or everything as JSON")
      ->check(CLI::IsMember({"spec", "labeled", "consolidated", "json"}))
      ->capture_default_str();
  app.add_flag("-c,--check", config.check,
               "Check the generated specification for satisfiability");
  app.add_flag("--strict-atoms,!--no-strict-atoms", config.strict_atoms,
               "Treat duplicate atomic activities as errors (default) or "
               "downgrade them to warnings");
  app.add_option("--max-prefix", config.bounds.max_prefix,
                 "Largest lasso prefix length searched")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--max-loop", config.bounds.max_loop,
                 "Largest lasso loop length searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("-o,--output", output,
                 "Write the emitted output to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (emit == "labeled") {
    config.emit = patgen::EmitMode::Labeled;
  } else if (emit == "consolidated") {
    config.emit = patgen::EmitMode::Consolidated;
  } else if (emit == "json") {
    config.emit = patgen::EmitMode::Json;
  } else {
    config.emit = patgen::EmitMode::Spec;
  }
  if (!output.empty()) config.output_path = output;

  return patgen::run(config, std::cout, std::cerr);
}
