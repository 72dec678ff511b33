#include "purl/expander.hpp"

#include <iterator>
#include <utility>

namespace purl {

namespace {

// Replaces each variable in `expr` by the children of its binding.
void substitute(Node& expr, const ParamMap& pm, Node& owner, CompileContext& ctx) {
  std::vector<Node> out;
  out.reserve(expr.children.size());
  for (Node& term : expr.children) {
    if (term.kind != NodeKind::NatVariable) {
      out.push_back(std::move(term));
      continue;
    }
    const auto it = pm.find(term.name);
    if (it == pm.end()) {
      ctx.pos = term.pos;
      add_message(ctx, Severity::Error, &owner, "Unbound variable '" + term.name + "'.");
      out.push_back(make_literal(0, term.pos));
      continue;
    }
    for (const Node& bound : it->second.children) out.push_back(bound);
  }
  expr.children = std::move(out);
}

// Collapses the literal terms into one so that argument chains such as
// `n + 1` stay a fixed size through deep recursion.
void fold_literals(Node& expr) {
  std::vector<Node> out;
  out.reserve(expr.children.size());
  Node* literal = nullptr;
  for (Node& term : expr.children) {
    if (term.kind == NodeKind::NatLiteral && literal) {
      literal->value = sat_add(literal->value, term.value);
      continue;
    }
    out.push_back(std::move(term));
    if (out.back().kind == NodeKind::NatLiteral) literal = &out.back();
  }
  expr.children = std::move(out);
}

void substitute_fields(Node& node, const ParamMap& pm, CompileContext& ctx) {
  if (node.rep_count) substitute(*node.rep_count, pm, node, ctx);
  if (node.num) substitute(*node.num, pm, node, ctx);
}

std::int64_t sum_literals(const Node& expr) {
  std::int64_t total = 0;
  for (const Node& term : expr.children) {
    if (term.kind == NodeKind::NatLiteral) total = sat_add(total, term.value);
  }
  return total;
}

}  // namespace

bool evaluate_condition(Node& cond, const ParamMap& pm, CompileContext& ctx) {
  cond.do_branch = false;
  if (!cond.complete || !cond.left || !cond.right) return false;

  Node left = *cond.left;
  Node right = *cond.right;
  substitute(left, pm, cond, ctx);
  substitute(right, pm, cond, ctx);
  const std::int64_t a = sum_literals(left);
  const std::int64_t b = sum_literals(right);

  switch (cond.compare) {
    case CompareType::Eq: cond.do_branch = a == b; break;
    case CompareType::Lt: cond.do_branch = a < b; break;
    case CompareType::Leq: cond.do_branch = a <= b; break;
    case CompareType::Gt: cond.do_branch = a > b; break;
    case CompareType::Geq: cond.do_branch = a >= b; break;
  }
  return cond.do_branch;
}

namespace {

bool traverse_into(std::vector<Node>& children, Node& owner, const ParamMap& pm, CompileContext& ctx,
                   std::vector<Node>& out);

// Appends the expansion of `call` to `out`.
void expand_call_into(Node& call, const ParamMap& pm, CompileContext& ctx, std::vector<Node>& out) {
  if (ctx.expansion_budget <= 0) {
    if (!ctx.budget_reported) {
      ctx.pos = call.pos;
      add_message(ctx, Severity::Error, &call, "Sample expansion limit exceeded.");
      ctx.budget_reported = true;
    }
    return;
  }

  const auto def = ctx.samples.find(call.name);
  // Unknown names were reported by the parser.
  if (def == ctx.samples.end()) return;
  --ctx.expansion_budget;

  // Arguments see the caller's scope; none of them sees another's binding.
  ParamMap local = pm;
  for (Node& arg : call.arguments) {
    Node bound = arg;
    substitute(bound, pm, call, ctx);
    fold_literals(bound);
    if (!arg.name.empty()) local.insert_or_assign(arg.name, std::move(bound));
  }

  std::vector<Node> body = def->second.children;
  bool has_branches = false;
  for (const Node& child : body) has_branches = has_branches || child.kind == NodeKind::Branch;

  const std::size_t mark = out.size();
  const bool took_branch = traverse_into(body, call, local, ctx, out);
  if (has_branches && !took_branch) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
    ctx.pos = call.pos;
    add_message(ctx, Severity::Warning, &call,
                "No branch of sample '" + call.name + "' applies; it expands to nothing.");
  }
}

// Expands `children` onto the end of `out`. A selected branch discards what
// this list had already produced.
bool traverse_into(std::vector<Node>& children, Node& owner, const ParamMap& pm, CompileContext& ctx,
                   std::vector<Node>& out) {
  const std::size_t mark = out.size();
  for (Node& child : children) {
    switch (child.kind) {
      case NodeKind::Section:
        ctx.section_name = child.name;
        traverse_children(child, pm, ctx);
        out.push_back(std::move(child));
        break;

      case NodeKind::SampleCall:
        expand_call_into(child, pm, ctx, out);
        break;

      case NodeKind::Branch:
        if (child.condition && evaluate_condition(*child.condition, pm, ctx)) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
          traverse_into(child.children, child, pm, ctx, out);
          return true;
        }
        break;

      case NodeKind::Expression:
        substitute(child, pm, owner, ctx);
        out.push_back(std::move(child));
        break;

      default:
        substitute_fields(child, pm, ctx);
        if (!is_stitch(child.kind)) traverse_children(child, pm, ctx);
        out.push_back(std::move(child));
        break;
    }
  }
  return false;
}

}  // namespace

std::vector<Node> expand_sample_call(Node& call, const ParamMap& pm, CompileContext& ctx) {
  std::vector<Node> out;
  expand_call_into(call, pm, ctx, out);
  return out;
}

bool traverse_children(Node& node, const ParamMap& pm, CompileContext& ctx) {
  std::vector<Node> out;
  out.reserve(node.children.size());
  const bool took = traverse_into(node.children, node, pm, ctx, out);
  node.children = std::move(out);
  return took;
}

void expand(Node& root, CompileContext& ctx) {
  ctx.section_name.reset();
  ctx.row_index = 0;
  const ParamMap empty;
  for (Node& pattern : root.children) {
    if (pattern.kind == NodeKind::Pattern) traverse_children(pattern, empty, ctx);
  }
  ctx.section_name.reset();
}

}  // namespace purl
