#include "purl/parser.hpp"

#include <charconv>
#include <string>

namespace purl {

namespace {

// Largest natural literal accepted in source.
constexpr std::int64_t kMaxNat = 2'147'483'647;

bool starts_expression(SymbolKind kind) { return kind == SymbolKind::Nat || kind == SymbolKind::Ident; }

bool starts_body_element(SymbolKind kind) {
  return kind == SymbolKind::KwRow || kind == SymbolKind::KwRnd || kind == SymbolKind::RowRep ||
         kind == SymbolKind::Asterisk || kind == SymbolKind::Ident;
}

bool has_embedded_num(NodeKind kind) {
  switch (kind) {
    case NodeKind::KnitBelow:
    case NodeKind::PurlBelow:
    case NodeKind::Make:
    case NodeKind::MakeL:
    case NodeKind::MakeR:
    case NodeKind::KnitTog:
    case NodeKind::PurlTog:
      return true;
    default:
      return false;
  }
}

std::string quoted(std::string_view text) { return "'" + std::string(text) + "'"; }

std::string describe(const Symbol& sym) {
  if (sym.kind == SymbolKind::Eof) return "end of input";
  return quoted(sym.text);
}

}  // namespace

Parser::Parser(std::string_view source, CompileContext& ctx) : lexer_(source), ctx_(ctx) { next(); }

void Parser::next() {
  sym_ = lexer_.next_symbol();
  ctx_.pos = lexer_.current_pos();
}

void Parser::scan_to(const SymbolSet& kinds) {
  while (!kinds.contains(sym_.kind) && !at(SymbolKind::Eof)) next();
}

void Parser::error(Node& node, std::string message) {
  add_message(ctx_, Severity::Error, &node, std::move(message));
}

void Parser::warning(Node& node, std::string message) {
  add_message(ctx_, Severity::Warning, &node, std::move(message));
}

void Parser::report_unexpected(Node& node) {
  if (at(SymbolKind::Ident)) {
    error(node, "Invalid use of ident " + sym_.text + ".");
  } else if (is_keyword(sym_.kind)) {
    error(node, "Invalid use of keyword " + sym_.text + ".");
  } else if (is_punctuation(sym_.kind)) {
    error(node, "Invalid use of " + quoted(sym_.text) + " character.");
  } else if (at(SymbolKind::Unknown)) {
    error(node, "Unrecognized character " + quoted(sym_.text) + ".");
  }
}

bool Parser::colon_separator(Node& node, std::string_view what) {
  if (at(SymbolKind::Colon)) {
    next();
    return true;
  }
  if (at(SymbolKind::Semicolon)) {
    warning(node, "Use ':' symbol before listing " + std::string(what) + " elements.");
    next();
    return true;
  }
  report_unexpected(node);
  error(node, "Missing ':' symbol before listing " + std::string(what) + " elements.");
  scan_to({SymbolKind::Period});
  return false;
}

void Parser::period_terminator(Node& node, std::string_view what) {
  if (at(SymbolKind::Period)) {
    next();
  } else if (at(SymbolKind::Comma)) {
    warning(node, "Use '.' symbol at end of " + std::string(what) + ".");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '.' symbol at end of " + std::string(what) + ".");
    scan_to({SymbolKind::Period});
    next();
  }
}

std::int64_t Parser::nat_value(Node& node) {
  std::int64_t value = 0;
  const char* first = sym_.text.data();
  const char* last = first + sym_.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value > kMaxNat) {
    error(node, "Number " + sym_.text + " is too large.");
    return 0;
  }
  return value;
}

Node Parser::parse_program() {
  Node root = make_node(NodeKind::Root, sym_.pos);
  if (at(SymbolKind::Eof)) {
    warning(root, "No pattern to compile :(");
    return root;
  }
  while (at(SymbolKind::KwSample)) parse_sample_def();

  root.children.push_back(parse_pattern());

  if (!at(SymbolKind::Eof)) {
    report_unexpected(root);
    error(root, "Unexpected input after the end of the pattern.");
  }
  return root;
}

Node Parser::parse_pattern() {
  Node node = make_node(NodeKind::Pattern, sym_.pos);

  if (at(SymbolKind::KwPattern)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A pattern declaration must start with 'pattern'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Expecting 'pattern' to start pattern declaration.");
    scan_to({SymbolKind::Colon});
  }

  if (at(SymbolKind::String)) {
    node.name = sym_.text;
    next();
  } else if (at(SymbolKind::Ident)) {
    node.name = sym_.text;
    warning(node, "Remember to use double quotes around the name of your pattern.");
    next();
  } else {
    report_unexpected(node);
    error(node, "The pattern name is not specified.");
    scan_to({SymbolKind::Colon});
  }

  colon_separator(node, "pattern");

  if (at(SymbolKind::KwCastOn) || at(SymbolKind::KwPickUp)) {
    node.start = at(SymbolKind::KwCastOn) ? parse_cast_on() : parse_pick_up();
    node.children = parse_body();
    node.finish = parse_finish(/*allow_join=*/true);
  } else {
    while (at(SymbolKind::KwSection)) node.children.push_back(parse_section());
    if (node.children.empty()) {
      report_unexpected(node);
      error(node, "Missing pattern content. Expecting 'CO' or 'section'.");
    }
  }
  return node;
}

Node Parser::parse_finish(bool allow_join) {
  if (allow_join && at(SymbolKind::KwJoin)) return parse_join();
  return parse_bind_off();
}

Node Parser::parse_cast_on() {
  Node node = make_node(NodeKind::CastOn, sym_.pos);

  if (at(SymbolKind::KwCastOn)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A cast-on declaration must start with 'CO'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'CO' at start of cast-on declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::Nat)) {
    node.value = nat_value(node);
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing cast-on count.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::KwCircular)) {
    node.co_type = CoType::Circular;
    next();
  } else if (at(SymbolKind::KwProvisional)) {
    node.co_type = CoType::Provisional;
    next();
  } else {
    node.co_type = CoType::Flat;
  }

  period_terminator(node, "cast-on");
  return node;
}

Node Parser::parse_pick_up() {
  Node node = make_node(NodeKind::PickUp, sym_.pos);

  if (at(SymbolKind::KwPickUp)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A pick-up declaration must start with 'PU'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'PU' at start of pick-up declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::Nat)) {
    node.value = nat_value(node);
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing pick-up count.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::KwFrom)) {
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'from' in pick-up declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::String)) {
    node.place = sym_.text;
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing pick-up origin.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  period_terminator(node, "pick-up");
  return node;
}

std::vector<Node> Parser::parse_body() {
  std::vector<Node> elems;
  for (;;) {
    switch (sym_.kind) {
      case SymbolKind::KwRow:
      case SymbolKind::KwRnd:
        elems.push_back(parse_row_def());
        break;
      case SymbolKind::RowRep:
      case SymbolKind::Asterisk:
        elems.push_back(parse_row_repeat());
        break;
      case SymbolKind::Ident:
        elems.push_back(parse_sample_call());
        break;
      default:
        return elems;
    }
  }
}

Node Parser::parse_row_def() {
  Node node = make_node(NodeKind::Row, sym_.pos);

  if (at(SymbolKind::KwRow)) {
    node.row_type = RowType::Row;
    next();
  } else if (at(SymbolKind::KwRnd)) {
    node.row_type = RowType::Rnd;
    next();
  } else {
    report_unexpected(node);
    error(node, "Invalid row type specified.");
    node.row_type = RowType::Rnd;
    next();
  }

  if (at(SymbolKind::KwMainColor)) {
    node.color = ColorType::MC;
    next();
  } else if (at(SymbolKind::KwContrastColor)) {
    node.color = ColorType::CC;
    next();
  }

  if (colon_separator(node, "row")) {
    node.children.push_back(parse_row_elem());
    while (at(SymbolKind::Comma)) {
      next();
      node.children.push_back(parse_row_elem());
    }
  }

  period_terminator(node, "row");
  return node;
}

Node Parser::parse_row_elem() {
  if (is_stitch(sym_.kind) || at(SymbolKind::OpenAngle) || at(SymbolKind::OpenBrack) ||
      at(SymbolKind::OpenParen)) {
    return parse_stitch_op();
  }
  if (at(SymbolKind::Asterisk)) return parse_undetermined_rep();

  Node node = make_node(NodeKind::Invalid, sym_.pos);
  report_unexpected(node);
  error(node, "Invalid row element.");
  scan_to({SymbolKind::Period});
  return node;
}

Node Parser::parse_stitch_op() {
  if (at(SymbolKind::OpenBrack)) return parse_fixed_rep();
  if (at(SymbolKind::OpenAngle)) return parse_compound_stitch();
  if (at(SymbolKind::OpenParen)) return parse_paren_group();
  if (is_stitch(sym_.kind)) return parse_basic_stitch();

  Node node = make_node(NodeKind::Invalid, sym_.pos);
  report_unexpected(node);
  error(node, describe(sym_) + " is not a known stitch, start of stitch repeat or compound stitch.");
  scan_to({SymbolKind::Period});
  return node;
}

void Parser::parse_optional_rep_count(Node& node) {
  if (starts_expression(sym_.kind)) node.rep_count = parse_expression({SymbolKind::Comma, SymbolKind::Period});
}

Node Parser::parse_basic_stitch() {
  Node node = make_node(stitch_node_kind(sym_.kind), sym_.pos);

  std::int64_t num = 0;
  if (has_embedded_num(node.kind)) {
    const auto begin = sym_.text.find_first_of("123456789");
    const auto end = sym_.text.find_first_not_of("0123456789", begin);
    const std::string digits = sym_.text.substr(begin, end - begin);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), num);
    if (ec != std::errc() || num > kMaxNat) {
      error(node, "Number " + digits + " is too large.");
      num = 0;
    }
    node.num = make_literal_expression(num, sym_.pos);
  }
  node.effect = basic_stitch_effect(node.kind, num);
  next();

  parse_optional_rep_count(node);
  return node;
}

// Parses a comma separated list of stitch operations into node.children.
// Returns false when a child failed and the scan already reached the parent
// terminator.
bool Parser::parse_stitch_op_list(Node& node, bool basic_only) {
  for (;;) {
    if (basic_only && !is_stitch(sym_.kind)) {
      Node bad = make_node(NodeKind::Invalid, sym_.pos);
      report_unexpected(bad);
      error(bad, "Compound stitch elements must be basic stitches.");
      node.children.push_back(std::move(bad));
      scan_to({SymbolKind::Period});
      return false;
    }
    Node child = basic_only ? parse_basic_stitch() : parse_stitch_op();
    const bool failed = child.kind == NodeKind::Invalid;
    node.children.push_back(std::move(child));
    if (failed) return false;
    if (!at(SymbolKind::Comma)) return true;
    next();
  }
}

Node Parser::parse_compound_stitch() {
  Node node = make_node(NodeKind::CompSt, sym_.pos);

  if (at(SymbolKind::OpenAngle)) {
    next();
  } else if (at(SymbolKind::OpenParen) || at(SymbolKind::OpenBrack)) {
    warning(node, "Use '<' symbol at start of compound stitch.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '<' symbol at start of compound stitch.");
    scan_to({SymbolKind::Period});
    return node;
  }

  if (!parse_stitch_op_list(node, /*basic_only=*/true)) return node;

  if (at(SymbolKind::CloseAngle)) {
    next();
  } else if (at(SymbolKind::CloseParen) || at(SymbolKind::CloseBrack)) {
    warning(node, "Use '>' symbol at end of compound stitch.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '>' symbol at end of compound stitch.");
    scan_to({SymbolKind::Period});
    return node;
  }

  parse_optional_rep_count(node);
  return node;
}

Node Parser::parse_fixed_rep() {
  Node node = make_node(NodeKind::FixedStRep, sym_.pos);

  if (at(SymbolKind::OpenBrack)) {
    next();
  } else if (at(SymbolKind::OpenAngle) || at(SymbolKind::OpenParen)) {
    warning(node, "Use '[' symbol to start fixed stitch repeat.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '[' symbol to start fixed stitch repeat.");
    scan_to({SymbolKind::Period});
    return node;
  }

  if (!parse_stitch_op_list(node, /*basic_only=*/false)) return node;

  if (at(SymbolKind::CloseBrack)) {
    next();
  } else if (at(SymbolKind::CloseAngle) || at(SymbolKind::CloseParen)) {
    warning(node, "Use ']' symbol to end fixed stitch repeat stitches.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing ']' symbol to end fixed stitch repeat stitches.");
    scan_to({SymbolKind::Period});
    return node;
  }

  node.rep_count = parse_expression({SymbolKind::Period});
  return node;
}

// A group opened with '(' is a fixed repeat when a repeat count follows its
// closing bracket (or it closes with ']'), otherwise a compound stitch.
Node Parser::parse_paren_group() {
  Node node = make_node(NodeKind::FixedStRep, sym_.pos);
  next();

  if (!parse_stitch_op_list(node, /*basic_only=*/false)) return node;

  const SymbolKind close = sym_.kind;
  if (close != SymbolKind::CloseParen && close != SymbolKind::CloseAngle &&
      close != SymbolKind::CloseBrack) {
    node.kind = NodeKind::CompSt;
    report_unexpected(node);
    error(node, "Missing '>' symbol at end of compound stitch.");
    scan_to({SymbolKind::Period});
    return node;
  }
  next();

  const bool fixed = close == SymbolKind::CloseBrack ||
                     (close == SymbolKind::CloseParen && starts_expression(sym_.kind));
  if (fixed) {
    warning(node, "Use '[' symbol to start fixed stitch repeat.");
    if (close != SymbolKind::CloseBrack) warning(node, "Use ']' symbol to end fixed stitch repeat stitches.");
    node.rep_count = parse_expression({SymbolKind::Period});
    return node;
  }

  node.kind = NodeKind::CompSt;
  warning(node, "Use '<' symbol at start of compound stitch.");
  if (close != SymbolKind::CloseAngle) warning(node, "Use '>' symbol at end of compound stitch.");
  for (const Node& child : node.children) {
    if (!is_stitch(child.kind)) {
      error(node, "Compound stitch elements must be basic stitches.");
      break;
    }
  }
  parse_optional_rep_count(node);
  return node;
}

Node Parser::parse_undetermined_rep() {
  Node node = make_node(NodeKind::UStRep, sym_.pos);
  node.num = make_literal_expression(0, sym_.pos);

  if (at(SymbolKind::Asterisk)) {
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '*' symbol at start of undetermined stitch repeat.");
    scan_to({SymbolKind::Period});
    return node;
  }

  if (!parse_stitch_op_list(node, /*basic_only=*/false)) return node;

  if (at(SymbolKind::Semicolon)) {
    next();
  } else if (at(SymbolKind::Colon)) {
    warning(node, "Use ';' symbol at the end of undetermined stitch repeat stitches.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing ';' symbol at the end of undetermined stitch repeat stitches.");
    scan_to({SymbolKind::Period});
    return node;
  }

  if (at(SymbolKind::KwTo)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "Use 'to' after ';' for undetermined stitch repeat.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'to' after ';' for undetermined stitch repeat.");
    scan_to({SymbolKind::Comma, SymbolKind::Period});
    return node;
  }

  if (at(SymbolKind::KwLast)) {
    next();
    node.num = parse_expression({SymbolKind::Comma, SymbolKind::Period});
  } else if (at(SymbolKind::KwEnd)) {
    node.num = make_literal_expression(0, sym_.pos);
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing repeat instructions. Expecting 'last' or 'end'.");
    scan_to({SymbolKind::Comma, SymbolKind::Period});
  }
  return node;
}

Node Parser::parse_bind_off() {
  Node node = make_node(NodeKind::BindOff, sym_.pos);

  if (at(SymbolKind::KwBindOff)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A bind-off declaration must start with 'BO'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'BO' at start of bind-off declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::Nat)) {
    node.value = nat_value(node);
    next();
  } else {
    report_unexpected(node);
    error(node, "Bind-off count not specified.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  period_terminator(node, "bind-off");
  return node;
}

Node Parser::parse_join() {
  Node node = make_node(NodeKind::Join, sym_.pos);

  if (at(SymbolKind::KwJoin)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A join declaration must start with 'Join'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'Join' at start of join declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::Nat)) {
    node.value = nat_value(node);
    next();
  } else {
    report_unexpected(node);
    error(node, "Join count not specified.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::KwTo)) {
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'to' in join declaration.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  if (at(SymbolKind::String)) {
    node.place = sym_.text;
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing join destination.");
    scan_to({SymbolKind::Period});
    next();
    return node;
  }

  period_terminator(node, "join");
  return node;
}

Node Parser::parse_row_repeat() {
  Node node = make_node(NodeKind::RowRep, sym_.pos);

  if (at(SymbolKind::RowRep)) {
    next();
  } else if (at(SymbolKind::Asterisk)) {
    warning(node, "Row repeat must begin with '**'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing '**' at start of row repeat.");
    scan_to({SymbolKind::Period});
    next();
  }

  node.children = parse_body();

  if (at(SymbolKind::KwRepeat)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "Row repeat body must be followed by 'repeat'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'repeat' after row repeat body.");
    scan_to({SymbolKind::Period});
    next();
    node.rep_count = make_literal_expression(1, node.pos);
    return node;
  }

  node.rep_count = parse_expression({SymbolKind::Period});
  return node;
}

Node Parser::parse_section() {
  Node node = make_node(NodeKind::Section, sym_.pos);

  if (at(SymbolKind::KwSection)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A section declaration must start with 'section'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'section' at start of section declaration.");
    scan_to({SymbolKind::Colon});
  }

  if (at(SymbolKind::String)) {
    node.name = sym_.text;
    ctx_.section_name = node.name;
    next();
  } else if (at(SymbolKind::Ident)) {
    node.name = sym_.text;
    ctx_.section_name = node.name;
    warning(node, "Remember to use double quotes around the name of a section.");
    next();
  } else {
    report_unexpected(node);
    error(node, "The section name is not specified.");
    scan_to({SymbolKind::Colon});
  }

  colon_separator(node, "section");

  if (at(SymbolKind::KwCastOn)) {
    node.start = parse_cast_on();
  } else if (at(SymbolKind::KwPickUp)) {
    node.start = parse_pick_up();
  } else {
    Node bad = make_node(NodeKind::Invalid, sym_.pos);
    report_unexpected(bad);
    error(bad, "A section must start with a cast-on or pick-up.");
    if (!starts_body_element(sym_.kind)) {
      scan_to({SymbolKind::Period});
      next();
    }
    node.start = std::move(bad);
  }

  node.children = parse_body();

  if (at(SymbolKind::KwBindOff)) {
    node.finish = parse_bind_off();
  } else if (at(SymbolKind::KwJoin)) {
    node.finish = parse_join();
  } else {
    Node bad = make_node(NodeKind::Invalid, sym_.pos);
    report_unexpected(bad);
    error(bad, "A section must end with a bind-off or join.");
    scan_to({SymbolKind::Period, SymbolKind::KwSection});
    if (at(SymbolKind::Period)) next();
    node.finish = std::move(bad);
  }
  return node;
}

Node Parser::parse_sample_def() {
  Node node = make_node(NodeKind::SampleDef, sym_.pos);

  if (at(SymbolKind::KwSample)) {
    next();
  } else if (at(SymbolKind::Ident)) {
    warning(node, "A sample definition must start with 'sample'.");
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing 'sample' at start of sample definition.");
    scan_to({SymbolKind::Ident});
  }

  const SymbolSet resume = {SymbolKind::KwWith, SymbolKind::Colon, SymbolKind::VerticalBar};
  if (at(SymbolKind::Ident)) {
    node.name = sym_.text;
    next();
  } else if (is_keyword(sym_.kind)) {
    error(node, sym_.text + " is a reserved keyword and not a valid sample identifier.");
    scan_to(resume);
  } else {
    error(node, "Missing or invalid sample identifier.");
    scan_to(resume);
  }

  if (at(SymbolKind::KwWith)) {
    next();
    for (;;) {
      if (at(SymbolKind::Ident)) {
        node.param_names.push_back(sym_.text);
        next();
      } else {
        report_unexpected(node);
        error(node, "Expecting a parameter name.");
      }
      if (!at(SymbolKind::Comma)) break;
      next();
    }
  }

  // Registered before the body is parsed so the body may call this sample.
  if (!node.name.empty()) {
    if (ctx_.samples.contains(node.name)) {
      warning(node, "Sample '" + node.name + "' is redefined; the last definition is used.");
    }
    ctx_.samples[node.name] = node;
  }

  if (at(SymbolKind::VerticalBar)) {
    while (at(SymbolKind::VerticalBar)) {
      next();
      Node branch = make_node(NodeKind::Branch, sym_.pos);
      branch.condition = parse_condition();
      colon_separator(branch, "branch");
      branch.children = parse_body();
      node.children.push_back(std::move(branch));
    }
  } else {
    colon_separator(node, "sample");
    node.children = parse_body();
  }

  if (!node.name.empty()) ctx_.samples[node.name] = node;
  return node;
}

Node Parser::parse_sample_call() {
  Node node = make_node(NodeKind::SampleCall, sym_.pos);

  if (at(SymbolKind::Ident)) {
    node.name = sym_.text;
    next();
  } else {
    report_unexpected(node);
    error(node, "Missing sample call identifier.");
    scan_to({SymbolKind::Period});
  }

  const auto def = ctx_.samples.find(node.name);
  const bool known = def != ctx_.samples.end();
  if (!known && !node.name.empty()) error(node, "Call to unknown sample '" + node.name + "'.");

  if (at(SymbolKind::KwWith)) {
    next();
    node.arguments.push_back(parse_expression({SymbolKind::Comma, SymbolKind::Period}));
    while (at(SymbolKind::Comma)) {
      next();
      node.arguments.push_back(parse_expression({SymbolKind::Comma, SymbolKind::Period}));
    }
  }

  if (known) {
    const auto& params = def->second.param_names;
    for (std::size_t i = 0; i < params.size() && i < node.arguments.size(); ++i) {
      node.arguments[i].name = params[i];
    }
    if (params.size() != node.arguments.size()) {
      error(node, node.name + " parameters required: " + std::to_string(params.size()) +
                      ", passed: " + std::to_string(node.arguments.size()) + ".");
      scan_to({SymbolKind::Period});
    }
  }

  period_terminator(node, "sample call");
  return node;
}

Node Parser::parse_nat_or_var() {
  if (at(SymbolKind::Nat)) {
    Node lit = make_node(NodeKind::NatLiteral, sym_.pos);
    lit.value = nat_value(lit);
    next();
    return lit;
  }
  Node var = make_node(NodeKind::NatVariable, sym_.pos);
  var.name = sym_.text;
  next();
  return var;
}

Node Parser::parse_expression(const SymbolSet& terminators) {
  Node node = make_node(NodeKind::Expression, sym_.pos);

  if (!starts_expression(sym_.kind)) {
    report_unexpected(node);
    error(node, "Expecting a number or variable.");
    return node;
  }

  node.children.push_back(parse_nat_or_var());
  while (at(SymbolKind::Plus)) {
    next();
    if (!starts_expression(sym_.kind)) {
      report_unexpected(node);
      error(node, "Expecting a number or variable after '+'.");
      scan_to(terminators);
      break;
    }
    node.children.push_back(parse_nat_or_var());
  }
  return node;
}

Node Parser::parse_condition() {
  Node node = make_node(NodeKind::Condition, sym_.pos);
  const SymbolSet terminators = {SymbolKind::Colon};

  if (starts_expression(sym_.kind)) {
    node.left = parse_expression(terminators);
  } else {
    node.complete = false;
    report_unexpected(node);
    error(node, "Missing left operand in condition.");
  }

  switch (sym_.kind) {
    case SymbolKind::Equal: node.compare = CompareType::Eq; next(); break;
    case SymbolKind::OpenAngle: node.compare = CompareType::Lt; next(); break;
    case SymbolKind::CloseAngle: node.compare = CompareType::Gt; next(); break;
    case SymbolKind::LessEq: node.compare = CompareType::Leq; next(); break;
    case SymbolKind::GreaterEq: node.compare = CompareType::Geq; next(); break;
    default:
      node.complete = false;
      error(node, "Missing comparison operator in condition.");
      break;
  }

  if (starts_expression(sym_.kind)) {
    node.right = parse_expression(terminators);
  } else {
    node.complete = false;
    report_unexpected(node);
    error(node, "Missing right operand in condition.");
  }
  return node;
}

Node parse_source(std::string_view source, CompileContext& ctx) {
  Parser parser(source, ctx);
  return parser.parse_program();
}

}  // namespace purl
