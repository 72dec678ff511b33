#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "purl/codegen.hpp"

namespace purl {

struct CliConfig {
  std::string input_path;
  std::optional<std::string> output_path;  // default: input with the format's extension
  OutputFormat format = OutputFormat::Html;
  bool emit_ast_json = false;
  bool strict = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCompileError = 1;
inline constexpr int kExitIoError = 2;

/// Compiles one file. Diagnostics go to `err`, the AST dumps to `out`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments and calls `run`.
int cli_main(int argc, char** argv);

}  // namespace purl
