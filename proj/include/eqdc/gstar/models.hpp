#pragma once

#include <string>
#include <vector>

#include "eqdc/gstar/gstar.hpp"

namespace eqdc::builtin {

/// Left-invariant forms on G: exterior algebra on lambda^a with the
/// Chevalley-Eilenberg differential and iota_a lambda^b = delta. Generator
/// names "lambda" (dim 1) or "lambda1", ....
GStarAlgebra invariant_forms(const LieAlgebra& g);

/// Circle acting on itself: Lambda(lambda_M), d lambda_M = 0, iota lambda_M = 1.
GStarAlgebra circle_rotation();

/// Free algebra on the given generators with d = 0 and trivial g-action.
GStarAlgebra trivial_model(const LieAlgebra& g, const std::vector<Generator>& generators);

}  // namespace eqdc::builtin
