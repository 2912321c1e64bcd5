#pragma once

#include "stieltjes2d/surface.hpp"

#include <string>
#include <vector>

namespace stieltjes2d {

// Compiled function registry. Fixtures carry analytic metadata (exact
// partials, closed-form cell integrals, declared jump lines) so library
// tests and the CLI agree exactly. Names are the `reg:` namespace.
const Surface& registry_lookup(const std::string& name);

std::vector<std::string> registry_names();

} // namespace stieltjes2d
