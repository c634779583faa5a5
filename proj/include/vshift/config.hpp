#pragma once

// Shift configuration files. The format is YAML (JSON is accepted as a subset):
//
//   coefficients: [1, 0.5, 0.25]
//   shifts: [0, 1, 2]
//   z_re: 0.5
//   z_im: 0.25
//   tail_bound: 0      # optional
//
// Structural problems raise ParseError with the offending key and line;
// semantic ones raise ConfigError from validate_config.

#include <string>
#include <string_view>

#include "vshift/shifts.hpp"

namespace vshift {

ShiftConfig parse_config(const std::string& path);

/// `source` only labels diagnostics.
ShiftConfig parse_config_text(std::string_view text, std::string_view source = "<config>");

}  // namespace vshift
