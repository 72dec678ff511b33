#pragma once

#include <optional>
#include <vector>

#include "purl/core.hpp"

namespace purl::oracle {

/// One stitch of a fully unrolled row. Stitches sharing a nonzero `group`
/// were made in the same active stitch.
struct FlatStitch {
  NodeKind kind = NodeKind::Knit;
  std::int64_t num = 0;
  std::int64_t group = 0;
};

/// Unrolls every repeat in `row`. Returns nullopt when the row holds an
/// undetermined repeat, whose count depends on the verifier.
std::optional<std::vector<FlatStitch>> flatten_row(const Node& row);

StitchEffect sum_effects(const std::vector<FlatStitch>& flat);

}  // namespace purl::oracle
