#include "purl/core.hpp"

namespace purl {

bool is_keyword(SymbolKind kind) {
  return kind >= SymbolKind::KwPattern && kind <= SymbolKind::KwContrastColor;
}

bool is_punctuation(SymbolKind kind) {
  return kind >= SymbolKind::Comma && kind <= SymbolKind::Equal;
}

bool is_stitch(SymbolKind kind) { return kind >= SymbolKind::StKnit && kind <= SymbolKind::StPSSO; }

std::string_view spelling(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::KwPattern: return "pattern";
    case SymbolKind::KwCastOn: return "CO";
    case SymbolKind::KwPickUp: return "PU";
    case SymbolKind::KwBindOff: return "BO";
    case SymbolKind::KwJoin: return "Join";
    case SymbolKind::KwCircular: return "circular";
    case SymbolKind::KwProvisional: return "provisional";
    case SymbolKind::KwSection: return "section";
    case SymbolKind::KwSample: return "sample";
    case SymbolKind::KwFrom: return "from";
    case SymbolKind::KwTo: return "to";
    case SymbolKind::KwLast: return "last";
    case SymbolKind::KwEnd: return "end";
    case SymbolKind::KwRow: return "row";
    case SymbolKind::KwRnd: return "rnd";
    case SymbolKind::KwRepeat: return "repeat";
    case SymbolKind::KwWith: return "with";
    case SymbolKind::KwWyif: return "wyif";
    case SymbolKind::KwWyib: return "wyib";
    case SymbolKind::KwMainColor: return "MC";
    case SymbolKind::KwContrastColor: return "CC";
    case SymbolKind::Comma: return ",";
    case SymbolKind::Period: return ".";
    case SymbolKind::Colon: return ":";
    case SymbolKind::Semicolon: return ";";
    case SymbolKind::Asterisk: return "*";
    case SymbolKind::Plus: return "+";
    case SymbolKind::Minus: return "-";
    case SymbolKind::OpenParen: return "(";
    case SymbolKind::CloseParen: return ")";
    case SymbolKind::OpenBrack: return "[";
    case SymbolKind::CloseBrack: return "]";
    case SymbolKind::OpenAngle: return "<";
    case SymbolKind::CloseAngle: return ">";
    case SymbolKind::VerticalBar: return "|";
    case SymbolKind::Equal: return "=";
    case SymbolKind::RowRep: return "**";
    case SymbolKind::LessEq: return "<=";
    case SymbolKind::GreaterEq: return ">=";
    default: return {};
  }
}

std::string_view to_string(SideType side) { return side == SideType::RS ? "RS" : "WS"; }

std::string_view to_string(CoType type) {
  switch (type) {
    case CoType::Flat: return "flat";
    case CoType::Circular: return "circular";
    case CoType::Provisional: return "provisional";
  }
  return {};
}

std::string_view to_string(RowType type) { return type == RowType::Row ? "row" : "rnd"; }

std::string_view to_string(ColorType color) {
  switch (color) {
    case ColorType::MC: return "MC";
    case ColorType::CC: return "CC";
    case ColorType::Unspecified: return "";
  }
  return {};
}

std::string_view to_string(CompareType cmp) {
  switch (cmp) {
    case CompareType::Eq: return "eq";
    case CompareType::Lt: return "lt";
    case CompareType::Leq: return "leq";
    case CompareType::Gt: return "gt";
    case CompareType::Geq: return "geq";
  }
  return {};
}

bool is_stitch(NodeKind kind) { return kind >= NodeKind::Knit && kind <= NodeKind::PSSO; }

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Root: return "Root";
    case NodeKind::Pattern: return "Pattern";
    case NodeKind::Section: return "Section";
    case NodeKind::CastOn: return "CO";
    case NodeKind::PickUp: return "PU";
    case NodeKind::BindOff: return "BO";
    case NodeKind::Join: return "Join";
    case NodeKind::Row: return "Row";
    case NodeKind::RowRep: return "RowRepeat";
    case NodeKind::SampleDef: return "SampleDef";
    case NodeKind::SampleCall: return "SampleCall";
    case NodeKind::FixedStRep: return "FixedStRep";
    case NodeKind::UStRep: return "UndeterminedStRep";
    case NodeKind::CompSt: return "CompSt";
    case NodeKind::Knit: return "K";
    case NodeKind::Purl: return "P";
    case NodeKind::KnitTBL: return "KB";
    case NodeKind::PurlTBL: return "PB";
    case NodeKind::KnitBelow: return "KBelow";
    case NodeKind::PurlBelow: return "PBelow";
    case NodeKind::Slip: return "S";
    case NodeKind::SlipKW: return "SK";
    case NodeKind::SlipPW: return "SP";
    case NodeKind::YarnOver: return "YO";
    case NodeKind::KnitFB: return "KFB";
    case NodeKind::PurlFB: return "PFB";
    case NodeKind::Make: return "M";
    case NodeKind::MakeL: return "ML";
    case NodeKind::MakeR: return "MR";
    case NodeKind::KnitTog: return "KT";
    case NodeKind::PurlTog: return "PT";
    case NodeKind::SSK: return "SSK";
    case NodeKind::SSP: return "SSP";
    case NodeKind::PSSO: return "PSSO";
    case NodeKind::Expression: return "expr";
    case NodeKind::NatLiteral: return "NatLit";
    case NodeKind::NatVariable: return "NatVar";
    case NodeKind::Condition: return "Condition";
    case NodeKind::Branch: return "Branch";
    case NodeKind::Invalid: return "Invalid";
  }
  return {};
}

NodeKind stitch_node_kind(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::StKnit: return NodeKind::Knit;
    case SymbolKind::StPurl: return NodeKind::Purl;
    case SymbolKind::StKnitTBL: return NodeKind::KnitTBL;
    case SymbolKind::StPurlTBL: return NodeKind::PurlTBL;
    case SymbolKind::StKnitBelow: return NodeKind::KnitBelow;
    case SymbolKind::StPurlBelow: return NodeKind::PurlBelow;
    case SymbolKind::StSlip: return NodeKind::Slip;
    case SymbolKind::StSlipKW: return NodeKind::SlipKW;
    case SymbolKind::StSlipPW: return NodeKind::SlipPW;
    case SymbolKind::StYarnOver: return NodeKind::YarnOver;
    case SymbolKind::StKnitFB: return NodeKind::KnitFB;
    case SymbolKind::StPurlFB: return NodeKind::PurlFB;
    case SymbolKind::StMake: return NodeKind::Make;
    case SymbolKind::StMakeL: return NodeKind::MakeL;
    case SymbolKind::StMakeR: return NodeKind::MakeR;
    case SymbolKind::StKnitTog: return NodeKind::KnitTog;
    case SymbolKind::StPurlTog: return NodeKind::PurlTog;
    case SymbolKind::StSSK: return NodeKind::SSK;
    case SymbolKind::StSSP: return NodeKind::SSP;
    case SymbolKind::StPSSO: return NodeKind::PSSO;
    default: return NodeKind::Invalid;
  }
}

StitchEffect basic_stitch_effect(NodeKind kind, std::int64_t num) {
  switch (kind) {
    case NodeKind::Knit:
    case NodeKind::Purl:
    case NodeKind::KnitTBL:
    case NodeKind::PurlTBL:
    case NodeKind::KnitBelow:
    case NodeKind::PurlBelow:
    case NodeKind::Slip:
    case NodeKind::SlipKW:
    case NodeKind::SlipPW:
      return {1, 0};
    case NodeKind::YarnOver:
    case NodeKind::Make:
    case NodeKind::MakeL:
    case NodeKind::MakeR:
      return {0, 1};
    case NodeKind::KnitFB:
    case NodeKind::PurlFB:
      return {1, 1};
    case NodeKind::KnitTog:
    case NodeKind::PurlTog:
      return {num, -(num - 1)};
    case NodeKind::SSK:
    case NodeKind::SSP:
      return {2, -1};
    case NodeKind::PSSO:
      return {0, -1};
    default:
      return {0, 0};
  }
}

Node make_node(NodeKind kind, SourcePos pos) {
  Node node;
  node.kind = kind;
  node.pos = pos;
  return node;
}

Node make_literal(std::int64_t value, SourcePos pos) {
  Node node = make_node(NodeKind::NatLiteral, pos);
  node.value = value;
  return node;
}

Node make_literal_expression(std::int64_t value, SourcePos pos) {
  Node expr = make_node(NodeKind::Expression, pos);
  expr.children.push_back(make_literal(value, pos));
  expr.value = value;
  return expr;
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Verification: return "verification";
  }
  return {};
}

void add_message(CompileContext& ctx, Severity severity, Node* node, std::string message) {
  Diagnostic diag;
  diag.severity = severity;
  diag.section_name = ctx.section_name;
  if (ctx.row_index > 0) diag.row_index = ctx.row_index;
  diag.pos = ctx.pos;
  diag.message = std::move(message);
  ctx.messages.push_back(std::move(diag));

  if (node == nullptr) return;
  switch (severity) {
    case Severity::Error: node->has_error_msg = true; break;
    case Severity::Warning: node->has_warning_msg = true; break;
    case Severity::Verification: node->has_verification_msg = true; break;
  }
}

std::size_t count_messages(const CompileContext& ctx, Severity severity) {
  std::size_t count = 0;
  for (const auto& msg : ctx.messages) {
    if (msg.severity == severity) ++count;
  }
  return count;
}

namespace {
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
}  // namespace

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return b > 0 ? kMax : kMin;
  return out;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return ((a < 0) != (b < 0)) ? kMin : kMax;
  return out;
}

}  // namespace purl
