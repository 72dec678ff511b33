#pragma once

#include <bitset>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "purl/core.hpp"
#include "purl/lexer.hpp"

namespace purl {

/// Set of symbol kinds a panic-mode scan may stop at.
class SymbolSet {
 public:
  SymbolSet(std::initializer_list<SymbolKind> kinds) {
    for (SymbolKind k : kinds) bits_.set(static_cast<std::size_t>(k));
  }
  bool contains(SymbolKind k) const { return bits_.test(static_cast<std::size_t>(k)); }

 private:
  std::bitset<128> bits_;
};

/// Pass 1: recursive-descent construction of the syntax tree. Sample
/// definitions are registered in `ctx.samples` rather than attached to the
/// tree. Every error is recorded in `ctx.messages` and parsing resumes at the
/// next sibling or parent terminator.
///
/// The constructor reads the first symbol; each `parse_*` method expects the
/// current symbol to begin its production.
class Parser {
 public:
  Parser(std::string_view source, CompileContext& ctx);

  Node parse_program();
  Node parse_pattern();
  Node parse_cast_on();
  Node parse_pick_up();
  std::vector<Node> parse_body();
  Node parse_row_def();
  Node parse_row_elem();
  Node parse_stitch_op();
  Node parse_basic_stitch();
  Node parse_compound_stitch();
  Node parse_fixed_rep();
  Node parse_undetermined_rep();
  Node parse_bind_off();
  Node parse_join();
  Node parse_row_repeat();
  Node parse_section();
  Node parse_sample_def();
  Node parse_sample_call();
  Node parse_expression(const SymbolSet& terminators);
  Node parse_condition();

  const Symbol& current() const { return sym_; }

 private:
  void next();
  bool at(SymbolKind kind) const { return sym_.kind == kind; }
  void scan_to(const SymbolSet& kinds);
  void report_unexpected(Node& node);
  void error(Node& node, std::string message);
  void warning(Node& node, std::string message);

  bool colon_separator(Node& node, std::string_view what);
  void period_terminator(Node& node, std::string_view what);
  Node parse_paren_group();
  Node parse_nat_or_var();
  std::int64_t nat_value(Node& node);
  bool parse_stitch_op_list(Node& node, bool basic_only);
  void parse_optional_rep_count(Node& node);
  Node parse_finish(bool allow_join);

  Lexer lexer_;
  CompileContext& ctx_;
  Symbol sym_;
};

/// Runs pass 1 over `source`.
Node parse_source(std::string_view source, CompileContext& ctx);

}  // namespace purl
