#include "purl/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "purl/ast_json.hpp"
#include "purl/compiler.hpp"

namespace purl {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

std::string default_output(const std::string& input, OutputFormat format) {
  std::filesystem::path path(input);
  path.replace_extension(format == OutputFormat::Html ? ".html" : ".txt");
  return path.string();
}

void dump_pass(std::ostream& out, int pass, const Node& tree) {
  out << "PASS " << pass << ":-------------------------------\n" << to_json(tree).dump(2) << "\n";
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto source = read_file(config.input_path);
  if (!source) {
    err << "error: cannot read '" << config.input_path << "'\n";
    return kExitIoError;
  }

  CompileOptions options;
  options.format = config.format;
  options.keep_pass_trees = config.emit_ast_json;
  const CompileResult result = compile(*source, options);

  if (config.emit_ast_json) {
    dump_pass(out, 1, *result.after_parse);
    dump_pass(out, 2, *result.after_expand);
    dump_pass(out, 3, result.ast);
  }

  for (const Diagnostic& diag : result.ctx.messages) err << format_diagnostic(diag) << "\n";

  std::string rendered = result.output;
  if (config.format == OutputFormat::Html) {
    std::string title = "Purl pattern";
    if (!result.ast.children.empty() && !result.ast.children.front().name.empty()) {
      title = result.ast.children.front().name;
    }
    rendered = html_document(rendered, title);
  }

  const std::string output_path = config.output_path.value_or(default_output(config.input_path, config.format));
  std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << rendered) || !file.flush()) {
    err << "error: cannot write '" << output_path << "'\n";
    file.close();
    std::error_code ec;
    std::filesystem::remove(output_path, ec);
    return kExitIoError;
  }

  if (result.errors() > 0) return kExitCompileError;
  if (config.strict && !result.ctx.messages.empty()) return kExitCompileError;
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Compiles a Purl knitting pattern to standard notation."};
  CliConfig config;
  std::string output;
  app.add_option("input", config.input_path, "Purl source file")->required();
  app.add_option("-o,--output", output, "Output file");
  std::string format = "html";
  app.add_option("--format", format, "Output format (html or text)")
      ->check(CLI::IsMember({"html", "text"}))
      ->capture_default_str();
  app.add_flag("--emit-ast-json", config.emit_ast_json, "Print the tree after each pass as JSON");
  app.add_flag("--strict", config.strict, "Fail on warnings and verification messages too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIoError;
  }
  if (!output.empty()) config.output_path = output;
  config.format = format == "text" ? OutputFormat::Text : OutputFormat::Html;
  return run(config, std::cout, std::cerr);
}

}  // namespace purl
