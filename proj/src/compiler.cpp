#include "purl/compiler.hpp"

#include <pthread.h>

#include <exception>
#include <functional>

#include "purl/expander.hpp"
#include "purl/parser.hpp"
#include "purl/verifier.hpp"

namespace purl {

namespace {

// Deep sample recursion can nest tens of thousands of frames before the
// expansion budget runs out, more than a default 8 MiB stack holds.
constexpr std::size_t kPassStackBytes = std::size_t{512} << 20;

void run_with_large_stack(const std::function<void()>& work) {
  struct Job {
    const std::function<void()>* work;
    std::exception_ptr error;
  } job{&work, nullptr};

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kPassStackBytes);
  pthread_t thread;
  const int rc = pthread_create(
      &thread, &attr,
      [](void* arg) -> void* {
        auto* j = static_cast<Job*>(arg);
        try {
          (*j->work)();
        } catch (...) {
          j->error = std::current_exception();
        }
        return nullptr;
      },
      &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    work();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

}  // namespace

CompileResult compile(std::string_view source, const CompileOptions& options) {
  CompileResult result;
  result.ctx.expansion_budget = options.expansion_budget;

  run_with_large_stack([&] {
    CompileContext& ctx = result.ctx;
    result.ast = parse_source(source, ctx);
    if (options.keep_pass_trees) result.after_parse = result.ast;

    expand(result.ast, ctx);
    if (options.keep_pass_trees) result.after_expand = result.ast;

    verify(result.ast, ctx);
    result.output = generate(result.ast, options.format);
  });
  return result;
}

std::string format_diagnostic(const Diagnostic& diag) {
  std::string line(to_string(diag.severity));
  line += ": ";
  if (diag.section_name) line += "Section: '" + *diag.section_name + "', ";
  if (diag.row_index) line += "Row: " + std::to_string(*diag.row_index) + ", ";
  if (diag.pos) line += "Line: " + std::to_string(diag.pos->line) + ":" + std::to_string(diag.pos->col) + ", ";
  line += diag.message;
  return line;
}

}  // namespace purl
