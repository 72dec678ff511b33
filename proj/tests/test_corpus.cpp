#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "purl/compiler.hpp"
#include "purl/expander.hpp"

using namespace purl;
namespace fs = std::filesystem;

namespace {

std::string diagnostics_of(const CompileResult& r) {
  std::string out;
  for (const Diagnostic& d : r.ctx.messages) out += format_diagnostic(d) + "\n";
  return out;
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(PURL_CORPUS_DIR)) {
    if (entry.path().extension() == ".purl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_CASE("fifteen corpus programs") { CHECK(corpus_files().size() == 15); }

TEST_CASE("golden HTML and diagnostics") {
  const bool update = std::getenv("PURL_UPDATE_GOLDEN") != nullptr;
  for (const fs::path& file : corpus_files()) {
    CAPTURE(file.string());
    const std::string src = test::read_text(file.string());
    const CompileResult first = compile(src);
    const CompileResult second = compile(src);
    CHECK(first.output == second.output);
    CHECK(diagnostics_of(first) == diagnostics_of(second));

    const fs::path stem = fs::path(PURL_GOLDEN_DIR) / file.stem();
    const std::string html_path = stem.string() + ".html";
    const std::string diag_path = stem.string() + ".diag";
    if (update) {
      std::ofstream(html_path, std::ios::binary) << first.output << "\n";
      std::ofstream(diag_path, std::ios::binary) << diagnostics_of(first);
    }
    REQUIRE(fs::exists(html_path));
    CHECK(test::read_text(html_path) == first.output + "\n");
    CHECK(test::read_text(diag_path) == diagnostics_of(first));
  }
}

TEST_CASE("no sample calls, branches or variables survive expansion") {
  for (const fs::path& file : corpus_files()) {
    CAPTURE(file.string());
    CompileOptions opt;
    opt.keep_pass_trees = true;
    const CompileResult r = compile(test::read_text(file.string()), opt);
    CHECK(test::find_all(*r.after_expand, NodeKind::SampleCall).empty());
    CHECK(test::find_all(*r.after_expand, NodeKind::Branch).empty());
    CHECK(test::find_all(*r.after_expand, NodeKind::NatVariable).empty());
    for (const Node* row : test::find_all(r.ast, NodeKind::Row)) {
      CHECK(row->index >= 1);
      CHECK(row->width >= 0);
    }
  }
}

TEST_CASE("clean corpus has no verification messages") {
  for (const fs::path& file : corpus_files()) {
    const std::string name = file.filename().string();
    if (name == "158_errors.purl" || name == "148_compound_stitch.purl") continue;
    CAPTURE(name);
    const CompileResult r = compile(test::read_text(file.string()));
    CHECK(r.errors() == 0);
    CHECK(count_messages(r.ctx, Severity::Verification) == 0);
  }
}

TEST_CASE("compound stitch program: the compound adds one stitch") {
  const CompileResult r = compile(test::corpus("148_compound_stitch.purl"));
  CHECK(r.errors() == 0);
  REQUIRE(r.ctx.messages.size() == 1);
  CHECK(r.ctx.messages[0].message == "Binding off 20 sts over 21 sts.");
}
