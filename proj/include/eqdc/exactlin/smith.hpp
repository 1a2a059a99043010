#pragma once

#include <optional>
#include <vector>

#include "eqdc/exactlin/matrix.hpp"

namespace eqdc {

/// U * m * V = D with U, V unimodular and D diagonal. The nonzero diagonal
/// entries come first, are positive, and each divides the next.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  std::size_t rank() const;
  /// Nonzero diagonal entries of D in order.
  std::vector<Integer> divisors() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Inverse of a unimodular matrix (exact, via adjugate-free elimination).
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

/// Some integer x with m x = b, or nullopt if no integer solution exists.
std::optional<IntegerVector> solve_integer(const IntegerMatrix& m, const IntegerVector& b);

}  // namespace eqdc
