#pragma once

#include <string>
#include <vector>

#include "spearlab/linop.hpp"

namespace spearlab {

/// Built-in operators:
///   example52_G1  identity matrix X1 -> ℓ∞⁴
///   example52_G2  G1* : ℓ1⁴ -> X1*
///   example52_G   G1 ⊕∞ G2 : X1 ⊕∞ ℓ1⁴ -> ℓ∞⁴ ⊕∞ X1*
///   id:<space>    the identity on any built-in space
/// Throws UnknownSpec.
LinOp standard_operator(const std::string& name);

std::vector<std::string> standard_operator_names();

}  // namespace spearlab
