#pragma once

#include <string>
#include <vector>

#include "qhall/cartan.hpp"

namespace qhall::cli {

/// The small quiver corpus: a1, a2, a3, b2, kronecker.
const std::vector<std::string>& builtin_names();
ValuedQuiver builtin_quiver(const std::string& name);

}  // namespace qhall::cli
