#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "f2sym/analyzer.hpp"
#include "f2sym/target.hpp"

namespace f2sym {

struct Translation {
  std::vector<UnitPlan> plans;
  target::StmtList program;
  std::string text;
};

/// Source text to target program, all units in source order.
Translation translate(std::string_view source);

/// Deletes whitespace outside double-quoted strings and drops the empty
/// lines this leaves, concatenating the rest.
std::string normalize(std::string_view text);

}  // namespace f2sym
