#include "purl/ast_json.hpp"

namespace purl {

nlohmann::json to_json(const Node& node) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(node.kind));
  j["pos"] = {{"line", node.pos.line}, {"col", node.pos.col}, {"offset", node.pos.offset}};

  if (node.value != 0) j["value"] = node.value;
  if (!node.name.empty()) j["name"] = node.name;
  if (!node.place.empty()) j["place"] = node.place;

  switch (node.kind) {
    case NodeKind::CastOn:
      j["coType"] = std::string(to_string(node.co_type));
      break;
    case NodeKind::Row:
      j["rowType"] = std::string(to_string(node.row_type));
      if (node.color != ColorType::Unspecified) j["color"] = std::string(to_string(node.color));
      if (node.index > 0) {
        j["index"] = node.index;
        j["side"] = std::string(to_string(node.side));
        j["width"] = node.width;
      }
      break;
    case NodeKind::Condition:
      j["compare"] = std::string(to_string(node.compare));
      if (!node.complete) j["complete"] = false;
      break;
    default:
      if (is_stitch(node.kind)) j["effect"] = {node.effect.worked_st, node.effect.st_change};
      break;
  }

  if (node.num) j["num"] = to_json(*node.num);
  if (node.rep_count) j["repCount"] = to_json(*node.rep_count);
  if (node.start) j["start"] = to_json(*node.start);
  if (node.finish) j["finish"] = to_json(*node.finish);
  if (node.left) j["left"] = to_json(*node.left);
  if (node.right) j["right"] = to_json(*node.right);
  if (node.condition) j["condition"] = to_json(*node.condition);
  if (!node.param_names.empty()) j["paramNames"] = node.param_names;
  if (!node.arguments.empty()) {
    nlohmann::json args = nlohmann::json::array();
    for (const Node& arg : node.arguments) args.push_back(to_json(arg));
    j["arguments"] = std::move(args);
  }
  if (!node.children.empty()) {
    nlohmann::json children = nlohmann::json::array();
    for (const Node& child : node.children) children.push_back(to_json(child));
    j["children"] = std::move(children);
  }

  nlohmann::json flags = nlohmann::json::array();
  if (node.has_error_msg) flags.push_back("error");
  if (node.has_warning_msg) flags.push_back("warning");
  if (node.has_verification_msg) flags.push_back("verification");
  if (!flags.empty()) j["messages"] = std::move(flags);
  return j;
}

}  // namespace purl
