#include "purl/lexer.hpp"

#include <array>
#include <regex>
#include <utility>

namespace purl {

namespace {

constexpr std::array kKeywords = {
    SymbolKind::KwPattern,  SymbolKind::KwCastOn,    SymbolKind::KwPickUp,   SymbolKind::KwBindOff,
    SymbolKind::KwJoin,     SymbolKind::KwCircular,  SymbolKind::KwProvisional,
    SymbolKind::KwSection,  SymbolKind::KwSample,    SymbolKind::KwFrom,     SymbolKind::KwTo,
    SymbolKind::KwLast,     SymbolKind::KwEnd,       SymbolKind::KwRow,      SymbolKind::KwRnd,
    SymbolKind::KwRepeat,   SymbolKind::KwWith,      SymbolKind::KwWyif,     SymbolKind::KwWyib,
    SymbolKind::KwMainColor, SymbolKind::KwContrastColor,
};

struct StitchPattern {
  SymbolKind kind;
  std::regex re;
};

const std::vector<StitchPattern>& stitch_patterns() {
  static const std::vector<StitchPattern> patterns = [] {
    const std::pair<SymbolKind, const char*> table[] = {
        {SymbolKind::StKnit, "^K$"},
        {SymbolKind::StPurl, "^P$"},
        {SymbolKind::StKnitTBL, "^KB$"},
        {SymbolKind::StPurlTBL, "^PB$"},
        {SymbolKind::StKnitBelow, "^K[1-9][0-9]*B$"},
        {SymbolKind::StPurlBelow, "^P[1-9][0-9]*B$"},
        {SymbolKind::StSlip, "^S$"},
        {SymbolKind::StSlipKW, "^SK$"},
        {SymbolKind::StSlipPW, "^SP$"},
        {SymbolKind::StYarnOver, "^YO$"},
        {SymbolKind::StKnitFB, "^KFB$"},
        {SymbolKind::StPurlFB, "^PFB$"},
        {SymbolKind::StMake, "^M[1-9][0-9]*$"},
        {SymbolKind::StMakeL, "^M[1-9][0-9]*L$"},
        {SymbolKind::StMakeR, "^M[1-9][0-9]*R$"},
        {SymbolKind::StKnitTog, "^K[1-9][0-9]*T$"},
        {SymbolKind::StPurlTog, "^P[1-9][0-9]*T$"},
        {SymbolKind::StSSK, "^SSK$"},
        {SymbolKind::StSSP, "^SSP$"},
        {SymbolKind::StPSSO, "^PSSO$"},
    };
    std::vector<StitchPattern> out;
    for (const auto& [kind, re] : table) out.push_back({kind, std::regex(re, std::regex::ECMAScript)});
    return out;
  }();
  return patterns;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

SymbolKind punctuation_kind(char c) {
  switch (c) {
    case ',': return SymbolKind::Comma;
    case '.': return SymbolKind::Period;
    case ':': return SymbolKind::Colon;
    case ';': return SymbolKind::Semicolon;
    case '*': return SymbolKind::Asterisk;
    case '+': return SymbolKind::Plus;
    case '-': return SymbolKind::Minus;
    case '(': return SymbolKind::OpenParen;
    case ')': return SymbolKind::CloseParen;
    case '[': return SymbolKind::OpenBrack;
    case ']': return SymbolKind::CloseBrack;
    case '<': return SymbolKind::OpenAngle;
    case '>': return SymbolKind::CloseAngle;
    case '|': return SymbolKind::VerticalBar;
    case '=': return SymbolKind::Equal;
    default: return SymbolKind::Unknown;
  }
}

}  // namespace

SymbolKind classify_word(std::string_view word) {
  for (SymbolKind kw : kKeywords) {
    if (word == spelling(kw)) return kw;
  }
  const std::string text(word);
  for (const auto& pattern : stitch_patterns()) {
    if (std::regex_match(text, pattern.re)) return pattern.kind;
  }
  return SymbolKind::Ident;
}

Lexer::Lexer(std::string_view input) : input_(input) {}

char Lexer::peek(std::size_t ahead) const {
  const auto at = static_cast<std::size_t>(cursor_.offset) + ahead;
  return at < input_.size() ? input_[at] : '\0';
}

void Lexer::advance() {
  if (at_end()) return;
  const char c = peek();
  ++cursor_.offset;
  // "\r\n" counts once, on the '\n'.
  if (c == '\n' || (c == '\r' && peek() != '\n')) {
    ++cursor_.line;
    cursor_.col = 0;
  } else {
    ++cursor_.col;
  }
}

Symbol Lexer::next_symbol() {
  while (!at_end() && is_space(peek())) advance();

  Symbol sym;
  sym.pos = cursor_;

  if (at_end()) {
    sym.kind = SymbolKind::Eof;
    return sym;
  }

  const char c = peek();
  if (c == '"') {
    advance();
    const auto begin = static_cast<std::size_t>(cursor_.offset);
    while (!at_end() && peek() != '"') advance();
    sym.text = std::string(input_.substr(begin, static_cast<std::size_t>(cursor_.offset) - begin));
    if (!at_end()) advance();  // closing quote
    sym.kind = SymbolKind::String;
  } else if (is_digit(c)) {
    const auto begin = static_cast<std::size_t>(cursor_.offset);
    while (!at_end() && is_digit(peek())) advance();
    sym.text = std::string(input_.substr(begin, static_cast<std::size_t>(cursor_.offset) - begin));
    sym.kind = SymbolKind::Nat;
  } else if (is_alpha(c)) {
    const auto begin = static_cast<std::size_t>(cursor_.offset);
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) advance();
    sym.text = std::string(input_.substr(begin, static_cast<std::size_t>(cursor_.offset) - begin));
    sym.kind = classify_word(sym.text);
  } else if (SymbolKind kind = punctuation_kind(c); kind != SymbolKind::Unknown) {
    advance();
    const char after = at_end() ? '\0' : peek();
    if (kind == SymbolKind::Asterisk && after == '*') {
      kind = SymbolKind::RowRep;
      advance();
    } else if (kind == SymbolKind::OpenAngle && after == '=') {
      kind = SymbolKind::LessEq;
      advance();
    } else if (kind == SymbolKind::CloseAngle && after == '=') {
      kind = SymbolKind::GreaterEq;
      advance();
    }
    sym.kind = kind;
    sym.text = std::string(spelling(kind));
  } else {
    // One Unknown per character; a UTF-8 sequence counts as one character.
    const auto begin = static_cast<std::size_t>(cursor_.offset);
    advance();
    if ((static_cast<unsigned char>(c) & 0xC0U) == 0xC0U) {
      while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0U) == 0x80U) advance();
    }
    sym.text = std::string(input_.substr(begin, static_cast<std::size_t>(cursor_.offset) - begin));
    sym.kind = SymbolKind::Unknown;
  }

  last_pos_ = sym.pos;
  return sym;
}

}  // namespace purl
