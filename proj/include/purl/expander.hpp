#pragma once

#include <map>
#include <string>
#include <vector>

#include "purl/core.hpp"

namespace purl {

/// Parameter name to its bound Expression (literals only once substituted).
using ParamMap = std::map<std::string, Node, std::less<>>;

/// Pass 2: replaces sample calls with copies of their definitions, resolves
/// branch guards and substitutes variables. Works in place on `root`.
void expand(Node& root, CompileContext& ctx);

/// Expands the children of `node` under `pm`. Returns true when a Branch
/// child was selected and replaced the child list.
bool traverse_children(Node& node, const ParamMap& pm, CompileContext& ctx);

/// Returns the nodes a sample call expands to.
std::vector<Node> expand_sample_call(Node& call, const ParamMap& pm, CompileContext& ctx);

/// Evaluates a branch guard under `pm` and stores the result in `do_branch`.
bool evaluate_condition(Node& cond, const ParamMap& pm, CompileContext& ctx);

}  // namespace purl
