#include "f2sym/intrinsics.hpp"

#include <array>
#include <utility>

namespace f2sym {

std::optional<std::string_view> intrinsic_head(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 13>
      kTable = {{
          {"dsqrt", "Sqrt"}, {"sqrt", "Sqrt"},  {"cdabs", "Abs"},
          {"dabs", "Abs"},   {"abs", "Abs"},    {"dexp", "Exp"},
          {"exp", "Exp"},    {"dlog", "Log"},   {"log", "Log"},
          {"dsin", "Sin"},   {"dcos", "Cos"},   {"datan", "ArcTan"},
          {"dble", "Identity"},
      }};
  for (const auto& [fortran, head] : kTable) {
    if (fortran == name) return head;
  }
  return std::nullopt;
}

}  // namespace f2sym
