#pragma once

#include <string>
#include <string_view>

#include "purl/core.hpp"

namespace purl {

enum class OutputFormat : std::uint8_t { Html, Text };

/// Renders a verified tree in standard notation. HTML output is a fragment
/// of div and span elements; text output has one line per div.
std::string generate(const Node& root, OutputFormat format);

std::string generate_html(const Node& root);
std::string generate_text(const Node& root);

/// Wraps an HTML fragment in a minimal standalone document.
std::string html_document(std::string_view fragment, std::string_view title);

std::string html_escape(std::string_view text);

}  // namespace purl
