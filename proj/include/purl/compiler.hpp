#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "purl/codegen.hpp"
#include "purl/core.hpp"

namespace purl {

struct CompileOptions {
  OutputFormat format = OutputFormat::Html;
  std::int64_t expansion_budget = kDefaultExpansionBudget;
  // Keep copies of the tree after passes 1 and 2.
  bool keep_pass_trees = false;
};

struct CompileResult {
  Node ast;  // after all three passes
  std::optional<Node> after_parse;
  std::optional<Node> after_expand;
  CompileContext ctx;
  std::string output;  // rendered fragment or text

  std::size_t errors() const { return count_messages(ctx, Severity::Error); }
};

/// Runs parse, expand, verify and codegen over `source`.
CompileResult compile(std::string_view source, const CompileOptions& options = {});

/// One line per diagnostic, as printed by the command-line tool.
std::string format_diagnostic(const Diagnostic& diag);

}  // namespace purl
