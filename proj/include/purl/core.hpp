#pragma once

// Shared vocabulary for every compiler pass: symbols, AST nodes,
// diagnostics and the per-compilation context.

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace purl {

struct SourcePos {
  std::int64_t line = 1;    // 1-based
  std::int64_t col = 0;     // 0-based column on the line
  std::int64_t offset = 0;  // 0-based byte offset in the input

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class SymbolKind : std::uint8_t {
  Nat,
  Ident,
  String,
  RowRep,
  LessEq,
  GreaterEq,
  Eof,
  Unknown,

  // keywords
  KwPattern,
  KwCastOn,
  KwPickUp,
  KwBindOff,
  KwJoin,
  KwCircular,
  KwProvisional,
  KwSection,
  KwSample,
  KwFrom,
  KwTo,
  KwLast,
  KwEnd,
  KwRow,
  KwRnd,
  KwRepeat,
  KwWith,
  KwWyif,
  KwWyib,
  KwMainColor,
  KwContrastColor,

  // punctuation
  Comma,
  Period,
  Colon,
  Semicolon,
  Asterisk,
  Plus,
  Minus,
  OpenParen,
  CloseParen,
  OpenBrack,
  CloseBrack,
  OpenAngle,
  CloseAngle,
  VerticalBar,
  Equal,

  // stitches
  StKnit,
  StPurl,
  StKnitTBL,
  StPurlTBL,
  StKnitBelow,
  StPurlBelow,
  StSlip,
  StSlipKW,
  StSlipPW,
  StYarnOver,
  StKnitFB,
  StPurlFB,
  StMake,
  StMakeL,
  StMakeR,
  StKnitTog,
  StPurlTog,
  StSSK,
  StSSP,
  StPSSO,
};

bool is_keyword(SymbolKind kind);
bool is_punctuation(SymbolKind kind);
bool is_stitch(SymbolKind kind);

/// Reserved word spelling for a keyword kind, punctuation character for a
/// punctuation kind, empty otherwise.
std::string_view spelling(SymbolKind kind);

struct Symbol {
  SymbolKind kind = SymbolKind::Eof;
  std::string text;  // lexeme; string contents without quotes for String
  SourcePos pos;
};

enum class SideType : std::uint8_t { RS, WS };
enum class CoType : std::uint8_t { Flat, Circular, Provisional };
enum class RowType : std::uint8_t { Row, Rnd };
enum class ColorType : std::uint8_t { Unspecified, MC, CC };
enum class CompareType : std::uint8_t { Eq, Lt, Leq, Gt, Geq };

std::string_view to_string(SideType side);
std::string_view to_string(CoType type);
std::string_view to_string(RowType type);
std::string_view to_string(ColorType color);
std::string_view to_string(CompareType cmp);

enum class NodeKind : std::uint8_t {
  Root,
  Pattern,
  Section,
  CastOn,
  PickUp,
  BindOff,
  Join,
  Row,
  RowRep,
  SampleDef,
  SampleCall,
  FixedStRep,
  UStRep,
  CompSt,

  Knit,
  Purl,
  KnitTBL,
  PurlTBL,
  KnitBelow,
  PurlBelow,
  Slip,
  SlipKW,
  SlipPW,
  YarnOver,
  KnitFB,
  PurlFB,
  Make,
  MakeL,
  MakeR,
  KnitTog,
  PurlTog,
  SSK,
  SSP,
  PSSO,

  Expression,
  NatLiteral,
  NatVariable,
  Condition,
  Branch,

  // Placeholder left where a production failed to parse.
  Invalid,
};

bool is_stitch(NodeKind kind);
std::string_view to_string(NodeKind kind);

/// Node kind produced by a stitch symbol; Invalid for anything else.
NodeKind stitch_node_kind(SymbolKind kind);

/// Worked stitches and net width change of a single stitch or group.
struct StitchEffect {
  std::int64_t worked_st = 0;
  std::int64_t st_change = 0;

  friend bool operator==(const StitchEffect&, const StitchEffect&) = default;
};

/// Effect of one basic stitch; `num` is the embedded parameter (the 2 in K2T).
StitchEffect basic_stitch_effect(NodeKind kind, std::int64_t num);

/// Copyable owning pointer, used for optional child nodes held by value.
template <typename T>
class Boxed {
 public:
  Boxed() = default;
  Boxed(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Boxed(const Boxed& other) : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Boxed(Boxed&&) noexcept = default;
  Boxed& operator=(const Boxed& other) {
    if (this != &other) ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    return *this;
  }
  Boxed& operator=(Boxed&&) noexcept = default;
  ~Boxed() = default;

  explicit operator bool() const { return ptr_ != nullptr; }
  T* get() { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  void reset() { ptr_.reset(); }

 private:
  std::unique_ptr<T> ptr_;
};

struct Node {
  NodeKind kind = NodeKind::Invalid;
  SourcePos pos;
  std::vector<Node> children;

  // CastOn/PickUp/BindOff/Join count, NatLiteral value, evaluated
  // Expression sum.
  std::int64_t value = 0;
  // Pattern/Section title, SampleDef/SampleCall name, NatVariable name,
  // and for a SampleCall argument Expression the parameter it binds.
  std::string name;
  // PickUp origin or Join destination.
  std::string place;

  CoType co_type = CoType::Flat;
  RowType row_type = RowType::Rnd;
  ColorType color = ColorType::Unspecified;
  SideType side = SideType::RS;
  CompareType compare = CompareType::Eq;

  StitchEffect effect;

  Boxed<Node> num;        // stitch embedded parameter, UStRep distance
  Boxed<Node> rep_count;  // repeat expression
  Boxed<Node> start;      // Pattern/Section: CastOn or PickUp
  Boxed<Node> finish;     // Pattern/Section: BindOff or Join
  Boxed<Node> left;       // Condition operands
  Boxed<Node> right;
  Boxed<Node> condition;  // Branch guard

  std::vector<std::string> param_names;  // SampleDef
  std::vector<Node> arguments;           // SampleCall, Expressions named by parameter

  bool complete = true;    // Condition parsed with both operands and a comparator
  bool do_branch = false;  // Condition result after expansion

  // Row annotations written by verification.
  std::int64_t index = 0;
  std::int64_t width = 0;

  bool has_error_msg = false;
  bool has_warning_msg = false;
  bool has_verification_msg = false;
};

Node make_node(NodeKind kind, SourcePos pos = {});
Node make_literal(std::int64_t value, SourcePos pos = {});
Node make_literal_expression(std::int64_t value, SourcePos pos = {});

enum class Severity : std::uint8_t { Error, Warning, Verification };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::optional<std::string> section_name;
  std::optional<std::int64_t> row_index;
  std::optional<SourcePos> pos;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline constexpr std::int64_t kDefaultExpansionBudget = 10'000;

struct CompileContext {
  std::optional<std::string> section_name;
  std::map<std::string, Node, std::less<>> samples;
  std::vector<Diagnostic> messages;

  SideType side = SideType::RS;
  std::int64_t width = 0;
  std::int64_t row_index = 0;
  std::optional<SourcePos> pos;

  std::int64_t expansion_budget = kDefaultExpansionBudget;
  bool budget_reported = false;
};

/// Records a diagnostic with the context's section/row/position snapshot and
/// flags `node` (when given) with the matching marker.
void add_message(CompileContext& ctx, Severity severity, Node* node, std::string message);

std::size_t count_messages(const CompileContext& ctx, Severity severity);

// Saturating arithmetic for stitch counts; absurd repeat counts must not
// overflow into undefined behavior.
std::int64_t sat_add(std::int64_t a, std::int64_t b);
std::int64_t sat_mul(std::int64_t a, std::int64_t b);

}  // namespace purl
