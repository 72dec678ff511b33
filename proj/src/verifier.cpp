#include "purl/verifier.hpp"

#include <string>

namespace purl {

namespace {

class Verifier {
 public:
  explicit Verifier(CompileContext& ctx) : ctx_(ctx) {}

  void node(Node& n);
  void row(Node& n, bool shadow);
  void row_repeat(Node& n, bool shadow);
  void elem(Node& n, RowState& parent);

 private:
  void message(Node& n, std::string text) { add_message(ctx_, Severity::Verification, &n, std::move(text)); }
  void body(std::vector<Node>& children, bool shadow);
  void reset_width(std::int64_t width);
  void finish(Node& n);

  CompileContext& ctx_;
};

std::int64_t repeat_multiplier(Node& n, CompileContext& ctx) {
  if (!n.rep_count) return 1;
  const std::int64_t v = evaluate_expression(*n.rep_count, ctx);
  return v > 1 ? v : 1;
}

void flip(SideType& side) { side = side == SideType::RS ? SideType::WS : SideType::RS; }

void Verifier::reset_width(std::int64_t width) {
  ctx_.side = SideType::RS;
  ctx_.width = width;
  ctx_.row_index = 1;
}

void Verifier::body(std::vector<Node>& children, bool shadow) {
  for (Node& child : children) {
    if (child.kind == NodeKind::Row) {
      row(child, shadow);
    } else if (child.kind == NodeKind::RowRep) {
      row_repeat(child, shadow);
    }
  }
}

void Verifier::finish(Node& n) {
  ctx_.pos = n.pos;
  const std::int64_t saved_index = ctx_.row_index;
  ctx_.row_index = 0;
  if (n.kind == NodeKind::BindOff && n.value != ctx_.width) {
    message(n, "Binding off " + std::to_string(n.value) + " sts over " + std::to_string(ctx_.width) + " sts.");
  } else if (n.kind == NodeKind::Join && n.value != ctx_.width) {
    message(n, "Joining " + std::to_string(n.value) + " sts of " + std::to_string(ctx_.width) + " sts.");
  }
  ctx_.row_index = saved_index;
}

void Verifier::node(Node& n) {
  switch (n.kind) {
    case NodeKind::Root:
      for (Node& child : n.children) node(child);
      break;

    case NodeKind::Pattern:
    case NodeKind::Section:
      if (n.kind == NodeKind::Section) ctx_.section_name = n.name;
      // A failed start still begins a fresh piece of fabric.
      if (n.start) n.start->kind == NodeKind::Invalid ? reset_width(0) : node(*n.start);
      body(n.children, false);
      if (n.finish) node(*n.finish);
      if (n.kind == NodeKind::Pattern) {
        for (Node& child : n.children) {
          if (child.kind == NodeKind::Section) node(child);
        }
      }
      break;

    case NodeKind::CastOn:
    case NodeKind::PickUp:
      reset_width(n.value);
      break;

    case NodeKind::BindOff:
    case NodeKind::Join:
      finish(n);
      break;

    case NodeKind::Row:
      row(n, false);
      break;

    case NodeKind::RowRep:
      row_repeat(n, false);
      break;

    default:
      break;
  }
}

// A shadow walk re-checks a row repeat's later repetitions without touching
// row annotations or the row counter.
void Verifier::row(Node& n, bool shadow) {
  if (!shadow) {
    n.index = ctx_.row_index;
    n.side = ctx_.side;
  }
  const std::int64_t saved_index = ctx_.row_index;
  ctx_.row_index = n.index;

  RowState state{ctx_.width, 0, 0};
  for (Node& child : n.children) elem(child, state);

  ctx_.pos = n.pos;
  if (state.worked_st != ctx_.width) {
    message(n, std::to_string(state.worked_st) + " sts worked over " + std::to_string(ctx_.width) + " sts.");
  }
  std::int64_t width = sat_add(state.worked_st, state.st_change);
  if (width < 0) {
    message(n, "Row width becomes negative.");
    width = 0;
  }
  if (!shadow) n.width = width;
  ctx_.width = width;
  if (n.row_type == RowType::Row) flip(ctx_.side);

  ctx_.row_index = shadow ? saved_index : saved_index + 1;
}

void Verifier::row_repeat(Node& n, bool shadow) {
  const std::int64_t reps = repeat_multiplier(n, ctx_);

  std::int64_t width_before = ctx_.width;
  SideType side_before = ctx_.side;
  body(n.children, shadow);

  for (std::int64_t done = 1; done < reps; ++done) {
    if (ctx_.width == width_before) {
      // Every later repetition behaves like this one; only the side parity
      // still matters.
      if (ctx_.side != side_before && (reps - done) % 2 == 1) flip(ctx_.side);
      return;
    }
    if (done >= kRowRepeatWalkLimit) {
      ctx_.pos = n.pos;
      add_message(ctx_, Severity::Warning, &n,
                  "Row repeat verification stopped after " + std::to_string(kRowRepeatWalkLimit) + " repetitions.");
      return;
    }
    width_before = ctx_.width;
    side_before = ctx_.side;
    body(n.children, true);
  }
}

void Verifier::elem(Node& n, RowState& parent) {
  std::int64_t rep = repeat_multiplier(n, ctx_);
  const std::int64_t num = n.num ? evaluate_expression(*n.num, ctx_) : 0;

  switch (n.kind) {
    case NodeKind::FixedStRep: {
      RowState inner{parent.initial_width, 0, 0};
      for (Node& child : n.children) elem(child, inner);
      parent.worked_st = sat_add(parent.worked_st, sat_mul(inner.worked_st, rep));
      parent.st_change = sat_add(parent.st_change, sat_mul(inner.st_change, rep));
      break;
    }

    case NodeKind::UStRep: {
      RowState inner{parent.initial_width, 0, 0};
      for (Node& child : n.children) elem(child, inner);
      const std::int64_t to_work = parent.initial_width - parent.worked_st - num;
      ctx_.pos = n.pos;
      if (to_work < 0) {
        message(n, "Not enough sts remain for the undetermined repeat.");
        rep = 0;
      } else if (inner.worked_st <= 0) {
        if (to_work > 0) message(n, "Undetermined repeat works no stitches.");
        rep = 0;
      } else {
        const std::int64_t remainder = to_work % inner.worked_st;
        rep = to_work / inner.worked_st;
        if (remainder != 0) message(n, std::to_string(remainder) + " st will remain after the last possible repeat.");
      }
      parent.worked_st = sat_add(parent.worked_st, sat_mul(inner.worked_st, rep));
      parent.st_change = sat_add(parent.st_change, sat_mul(inner.st_change, rep));
      break;
    }

    case NodeKind::CompSt: {
      if (n.children.empty()) break;
      RowState inner{parent.initial_width, 0, 0};
      for (Node& child : n.children) elem(child, inner);
      // All loops are made in one active stitch, which is used up.
      const std::int64_t change = sat_add(sat_add(inner.worked_st, inner.st_change), -1);
      parent.worked_st = sat_add(parent.worked_st, rep);
      parent.st_change = sat_add(parent.st_change, sat_mul(change, rep));
      break;
    }

    default:
      if (is_stitch(n.kind)) {
        parent.worked_st = sat_add(parent.worked_st, sat_mul(n.effect.worked_st, rep));
        parent.st_change = sat_add(parent.st_change, sat_mul(n.effect.st_change, rep));
      }
      break;
  }
}

}  // namespace

std::int64_t evaluate_expression(Node& expr, CompileContext& ctx) {
  std::int64_t total = 0;
  for (Node& term : expr.children) {
    if (term.kind == NodeKind::NatLiteral) {
      total = sat_add(total, term.value);
    } else if (term.kind == NodeKind::NatVariable) {
      ctx.pos = term.pos;
      add_message(ctx, Severity::Error, &expr, "Unresolved variable '" + term.name + "'.");
    }
  }
  expr.value = total;
  return total;
}

void verify(Node& root, CompileContext& ctx) {
  ctx.section_name.reset();
  ctx.row_index = 0;
  ctx.width = 0;
  ctx.side = SideType::RS;
  Verifier(ctx).node(root);
}

void verify_row(Node& row, CompileContext& ctx) { Verifier(ctx).row(row, false); }

void verify_row_elem(Node& node, RowState& parent, CompileContext& ctx) { Verifier(ctx).elem(node, parent); }

}  // namespace purl
