#pragma once

#include <string_view>

namespace cuspvol {

// Angle grammar: [-] ( decimal | [M*]pi[/N] ), where "pi" may also be written as π.
double parse_angle(std::string_view text);

}  // namespace cuspvol
