#include "purl/codegen.hpp"

#include <sstream>
#include <vector>

namespace purl {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::int64_t value_of(const Boxed<Node>& expr) { return expr ? expr->value : 0; }

// One writer serves both formats; the text form drops the markup and turns
// every div boundary into a line break.
class Writer {
 public:
  explicit Writer(OutputFormat format) : html_(format == OutputFormat::Html) {}

  std::string node(const Node& n) const;

 private:
  std::string open(std::string_view cls) const {
    return html_ ? "<div class=\"" + std::string(cls) + "\">" : std::string("\n");
  }
  std::string close() const { return html_ ? "</div>" : "\n"; }
  std::string div(std::string_view cls, std::string_view text) const { return open(cls) + std::string(text) + close(); }
  std::string span(std::string_view cls, std::string_view text) const {
    if (!html_) return std::string(text);
    return "<span class=\"" + std::string(cls) + "\">" + std::string(text) + "</span>";
  }
  std::string escape(std::string_view text) const { return html_ ? html_escape(text) : std::string(text); }

  std::string markers(const Node& n) const;
  std::string items(const std::vector<Node>& children) const;
  std::string body(const Node& n) const;
  std::string pattern(const Node& n) const;
  std::string section(const Node& n) const;
  std::string row(const Node& n) const;
  std::string row_repeat(const Node& n) const;
  std::string basic_stitch(const Node& n) const;
  std::string compound(const Node& n) const;
  std::string fixed_repeat(const Node& n) const;
  std::string undetermined_repeat(const Node& n) const;

  bool html_;
};

std::string Writer::markers(const Node& n) const {
  std::string out;
  if (n.has_error_msg) out += span("error", "!");
  if (n.has_warning_msg) out += span("warning", "!");
  if (n.has_verification_msg) out += span("verification", "!");
  return out;
}

std::string Writer::items(const std::vector<Node>& children) const {
  std::vector<std::string> parts;
  parts.reserve(children.size());
  for (const Node& child : children) parts.push_back(node(child));
  return join(parts, ", ");
}

std::string Writer::body(const Node& n) const {
  std::string out = open("body");
  for (const Node& child : n.children) out += node(child);
  return out + close();
}

std::string Writer::pattern(const Node& n) const {
  std::string out = open("pattern") + div("patternname", escape(n.name));
  if (n.start) {
    out += node(*n.start) + body(n) + (n.finish ? node(*n.finish) : std::string());
  } else {
    for (const Node& child : n.children) out += node(child);
  }
  return out + close();
}

std::string Writer::section(const Node& n) const {
  std::string out = open("section") + div("sectionname", escape(n.name));
  if (n.start) out += node(*n.start);
  out += body(n);
  if (n.finish) out += node(*n.finish);
  return out + close();
}

std::string Writer::row(const Node& n) const {
  std::vector<std::string> parts;
  parts.emplace_back(n.row_type == RowType::Row ? "Row" : "Rnd");
  parts.push_back(std::to_string(n.index));
  if (n.color != ColorType::Unspecified) parts.push_back("(" + std::string(to_string(n.color)) + ")");
  parts.push_back("(" + std::string(to_string(n.side)) + "):");
  parts.push_back(items(n.children) + ".");
  parts.push_back(span("stitchcount", "(" + std::to_string(n.width) + " sts)"));
  return open("row") + join(parts, " ") + close();
}

std::string Writer::row_repeat(const Node& n) const {
  return open("rowrepeat") + "**" + body(n) + "rep from ** " + std::to_string(value_of(n.rep_count)) + " times" +
         close();
}

std::string Writer::basic_stitch(const Node& n) const {
  const std::int64_t rep_value = value_of(n.rep_count);
  const std::string rep = rep_value > 1 ? std::to_string(rep_value) : "";
  const std::int64_t num_value = value_of(n.num);
  const std::string num = num_value > 0 ? std::to_string(num_value) : "";

  // Stitches written with the count inside the abbreviation.
  switch (n.kind) {
    case NodeKind::Knit: return span("stitch", "K" + rep);
    case NodeKind::Purl: return span("stitch", "P" + rep);
    case NodeKind::KnitTBL: return span("stitch", "K" + rep + " tbl");
    case NodeKind::PurlTBL: return span("stitch", "P" + rep + " tbl");
    case NodeKind::KnitBelow: return span("stitch", "K" + num + "B" + rep);
    case NodeKind::PurlBelow: return span("stitch", "P" + num + "B" + rep);
    case NodeKind::Slip: return span("stitch", "sl" + rep);
    case NodeKind::SlipKW: return span("stitch", "sl" + rep + "k");
    case NodeKind::SlipPW: return span("stitch", "sl" + rep + "p");
    case NodeKind::YarnOver: return span("stitch", "yo" + rep);
    default: break;
  }

  std::string text;
  switch (n.kind) {
    case NodeKind::KnitFB: text = "KFB"; break;
    case NodeKind::PurlFB: text = "PFB"; break;
    case NodeKind::Make: text = "M" + num; break;
    case NodeKind::MakeL: text = "M" + num + "L"; break;
    case NodeKind::MakeR: text = "M" + num + "R"; break;
    case NodeKind::KnitTog: text = "k" + num + "tog"; break;
    case NodeKind::PurlTog: text = "p" + num + "tog"; break;
    case NodeKind::SSK: text = "ssk"; break;
    case NodeKind::SSP: text = "ssp"; break;
    case NodeKind::PSSO: text = "psso"; break;
    default: return {};
  }
  std::string out = span("stitch", text);
  if (!rep.empty()) out += " " + rep;
  return out;
}

std::string Writer::compound(const Node& n) const {
  std::vector<std::string> parts{"(" + items(n.children) + ")"};
  const std::int64_t rep = value_of(n.rep_count);
  if (rep > 1) parts.push_back(std::to_string(rep) + " times ");
  parts.emplace_back("in next st");
  return join(parts, " ");
}

std::string Writer::fixed_repeat(const Node& n) const {
  return "[" + items(n.children) + "] " + std::to_string(value_of(n.rep_count)) + " times";
}

std::string Writer::undetermined_repeat(const Node& n) const {
  const std::int64_t rem = value_of(n.num);
  std::string tail;
  if (rem == 0) {
    tail = "end";
  } else if (rem == 1) {
    tail = "last 1 st";
  } else if (rem > 1) {
    tail = "last " + std::to_string(rem) + " sts";
  } else {
    tail = "invalid value";
  }
  return "*" + items(n.children) + "; rep from * to " + tail;
}

std::string Writer::node(const Node& n) const {
  std::string out = markers(n);
  switch (n.kind) {
    case NodeKind::Root:
      for (const Node& child : n.children) out += node(child);
      break;
    case NodeKind::Pattern: out += pattern(n); break;
    case NodeKind::Section: out += section(n); break;
    case NodeKind::CastOn: {
      const std::string type = n.co_type == CoType::Flat ? "" : " " + std::string(to_string(n.co_type));
      out += div("caston", "Cast-on " + std::to_string(n.value) + " sts" + type + ".");
      break;
    }
    case NodeKind::PickUp:
      out += div("pickup", "Pick-up " + std::to_string(n.value) + " sts from " + escape(n.place) + ".");
      break;
    case NodeKind::BindOff: out += div("bindoff", "Bind-off  " + std::to_string(n.value) + " sts."); break;
    case NodeKind::Join:
      out += div("join", "Join  " + std::to_string(n.value) + " sts to " + escape(n.place) + ".");
      break;
    case NodeKind::Row: out += row(n); break;
    case NodeKind::RowRep: out += row_repeat(n); break;
    case NodeKind::FixedStRep: out += fixed_repeat(n); break;
    case NodeKind::UStRep: out += undetermined_repeat(n); break;
    case NodeKind::CompSt: out += compound(n); break;
    default:
      if (is_stitch(n.kind)) out += basic_stitch(n);
      break;
  }
  return out;
}

// Trims each line and drops empty ones.
std::string tidy_lines(const std::string& raw) {
  std::istringstream in(raw);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    out += line.substr(first, last - first + 1);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string generate(const Node& root, OutputFormat format) {
  const std::string raw = Writer(format).node(root);
  return format == OutputFormat::Html ? raw : tidy_lines(raw);
}

std::string generate_html(const Node& root) { return generate(root, OutputFormat::Html); }

std::string generate_text(const Node& root) { return generate(root, OutputFormat::Text); }

std::string html_document(std::string_view fragment, std::string_view title) {
  std::string out = "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>";
  out += html_escape(title);
  out += "</title>\n</head>\n<body>\n";
  out += fragment;
  out += "\n</body>\n</html>\n";
  return out;
}

}  // namespace purl
