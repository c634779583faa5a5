#include "vshift/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "vshift/errors.hpp"

namespace vshift {
namespace {

std::string where(std::string_view source, const YAML::Mark& mark) {
  std::string out(source);
  if (mark.line >= 0) out += ":" + std::to_string(mark.line + 1);
  return out;
}

double read_real(const YAML::Node& node, const std::string& key, std::string_view source) {
  if (!node.IsScalar()) {
    throw ParseError(where(source, node.Mark()) + ": field '" + key + "' must be a number");
  }
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw ParseError(where(source, node.Mark()) + ": field '" + key + "' is not a number: '" +
                     node.Scalar() + "'");
  }
}

std::vector<double> read_array(const YAML::Node& node, const std::string& key,
                               std::string_view source) {
  if (!node.IsSequence()) {
    throw ParseError(where(source, node.Mark()) + ": field '" + key + "' must be an array");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(read_real(node[i], key + "[" + std::to_string(i) + "]", source));
  }
  return out;
}

YAML::Node require(const YAML::Node& root, const std::string& key, std::string_view source) {
  const YAML::Node node = root[key];
  if (!node.IsDefined() || node.IsNull()) {
    throw ParseError(std::string(source) + ": missing required key '" + key + "'");
  }
  return node;
}

}  // namespace

ShiftConfig parse_config_text(std::string_view text, std::string_view source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(where(source, e.mark) + ": " + e.msg);
  }
  if (!root.IsMap()) throw ParseError(std::string(source) + ": expected a mapping of keys");

  static const char* const kKnown[] = {"coefficients", "shifts", "z_re", "z_im", "tail_bound"};
  for (const auto& entry : root) {
    const std::string key = entry.first.as<std::string>();
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ParseError(where(source, entry.first.Mark()) + ": unknown key '" + key + "'");
  }

  ShiftConfig cfg;
  cfg.coefficients = read_array(require(root, "coefficients", source), "coefficients", source);
  cfg.shifts = read_array(require(root, "shifts", source), "shifts", source);
  const double z_re = read_real(require(root, "z_re", source), "z_re", source);
  const double z_im = read_real(require(root, "z_im", source), "z_im", source);
  cfg.z = Complex{z_re, z_im};
  if (root["tail_bound"] && !root["tail_bound"].IsNull()) {
    cfg.tail_bound = read_real(root["tail_bound"], "tail_bound", source);
  }
  return validate_config(cfg);
}

ShiftConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

}  // namespace vshift
