#pragma once

#include <optional>
#include <string_view>

namespace f2sym {

/// Target head for a FORTRAN intrinsic, or nullopt for a user routine.
/// `dble` maps to "Identity": the argument passes through unchanged.
std::optional<std::string_view> intrinsic_head(std::string_view name);

}  // namespace f2sym
