#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "purl/compiler.hpp"
#include "purl/core.hpp"
#include "purl/parser.hpp"

namespace purl::test {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string corpus(const std::string& name) { return read_text(std::string(PURL_CORPUS_DIR) + "/" + name); }

inline void collect(const Node& n, NodeKind kind, std::vector<const Node*>& out) {
  if (n.kind == kind) out.push_back(&n);
  if (n.start) collect(*n.start, kind, out);
  for (const Node& c : n.children) collect(c, kind, out);
  if (n.finish) collect(*n.finish, kind, out);
}

/// Nodes of `kind` in document order.
inline std::vector<const Node*> find_all(const Node& root, NodeKind kind) {
  std::vector<const Node*> out;
  collect(root, kind, out);
  return out;
}

inline bool has_message(const CompileContext& ctx, Severity sev, const std::string& text) {
  return std::any_of(ctx.messages.begin(), ctx.messages.end(),
                     [&](const Diagnostic& d) { return d.severity == sev && d.message == text; });
}

inline std::size_t count_severity(const CompileContext& ctx, Severity sev) { return count_messages(ctx, sev); }

/// Parses only (pass 1).
inline Node parse(const std::string& src, CompileContext& ctx) { return parse_source(src, ctx); }

/// Parses a single production with a fresh parser.
inline Node parse_with(const std::string& src, CompileContext& ctx, const std::function<Node(Parser&)>& fn) {
  Parser p(src, ctx);
  return fn(p);
}

}  // namespace purl::test
