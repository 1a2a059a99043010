#pragma once

#include <vector>

#include "eqdc/gca/algebra.hpp"
#include "eqdc/liealg/invariant.hpp"

namespace eqdc {

/// Evaluation of w(Omega^n) for the connection Theta = sum_m x^{2m-1} dx^{2m} xi_{i_m}
/// on polynomial coefficients truncated at degree 2.
struct InjectivityWitness {
  std::vector<std::size_t> indices;  // zero-based i_1 <= ... <= i_n
  Rational polarized;                // w(xi_{i_1} ... xi_{i_n})
  Integer factorial;                 // n!
  Rational coefficient;              // dx^1...dx^{2n} coefficient at x = 0
  AlgebraPtr model;
  Element form;                      // w(Omega^n)
};

/// Searches the first index tuple (lexicographic) with nonzero polarization.
/// Throws NoNonzeroEvaluation if w = 0, DegreeMismatch if w is not
/// homogeneous, ModelInvariantViolation if the coefficient is not n! times
/// the polarization.
InjectivityWitness weil_injectivity_witness(const LieAlgebra& g, const InvariantPolynomial& w);

}  // namespace eqdc
