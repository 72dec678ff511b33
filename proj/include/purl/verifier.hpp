#pragma once

#include <cstdint>

#include "purl/core.hpp"

namespace purl {

/// Running totals for one row, or for one group inside a row.
struct RowState {
  std::int64_t initial_width = 0;
  std::int64_t worked_st = 0;
  std::int64_t st_change = 0;
};

/// Upper bound on re-walked repetitions of a row repeat whose width keeps
/// changing.
inline constexpr std::int64_t kRowRepeatWalkLimit = 10'000;

/// Pass 3: annotates rows with index, side and width and reports stitch
/// count mismatches.
void verify(Node& root, CompileContext& ctx);

void verify_row(Node& row, CompileContext& ctx);
void verify_row_elem(Node& node, RowState& parent, CompileContext& ctx);

/// Sums the literals of an Expression into `value`.
std::int64_t evaluate_expression(Node& expr, CompileContext& ctx);

}  // namespace purl
