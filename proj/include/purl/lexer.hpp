#pragma once

#include <string>
#include <string_view>

#include "purl/core.hpp"

namespace purl {

/// Classifies an alphanumeric run: keyword, stitch, or Ident.
SymbolKind classify_word(std::string_view word);

/// On-demand tokenizer over an in-memory source. Once Eof has been produced
/// every later call produces Eof again.
class Lexer {
 public:
  explicit Lexer(std::string_view input);

  Symbol next_symbol();

  /// Position of the most recently produced symbol other than Eof.
  SourcePos current_pos() const { return last_pos_; }

 private:
  bool at_end() const { return cursor_.offset >= static_cast<std::int64_t>(input_.size()); }
  char peek(std::size_t ahead = 0) const;
  void advance();

  std::string_view input_;
  SourcePos cursor_;
  SourcePos last_pos_;
};

}  // namespace purl
