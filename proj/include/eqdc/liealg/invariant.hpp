#pragma once

#include <string>
#include <vector>

#include "eqdc/liealg/lie_algebra.hpp"
#include "eqdc/liealg/polynomial.hpp"

namespace eqdc {

/// Element of S^k g*, written as a homogeneous polynomial in the coordinates
/// x^a of X = sum x^a xi_a.
struct InvariantPolynomial {
  std::string name;
  RationalPoly poly;
  /// Raw characteristic-polynomial coefficient = normalization * poly.
  /// 1 for polynomials not produced from a representation.
  GaussRational normalization = GaussRational(Rational(1));

  unsigned degree() const { return static_cast<unsigned>(poly.degree()); }
  /// Fully polarized symmetric form at (xi_{i1}, ..., xi_{ik}), zero-based indices.
  Rational polarized(const std::vector<std::size_t>& indices) const;

  friend InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b);
};

/// L_a P(X) = sum_{b,c} c^b_ac x^c dP/dx^b, one polynomial per basis vector.
/// Invariance means all of them vanish.
std::vector<RationalPoly> infinitesimal_action(const LieAlgebra& g, const RationalPoly& p);
bool is_invariant(const LieAlgebra& g, const RationalPoly& p);

/// Abelian g: all monomials of degree 1..max_k. Otherwise the normalized
/// characteristic-polynomial coefficients sigma_1..sigma_min(max_k, n) of the
/// defining representation, dropping identically zero ones.
/// Throws NoRepresentation if g is non-abelian without a representation.
std::vector<InvariantPolynomial> invariant_generators(const LieAlgebra& g, unsigned max_k);

/// Coefficient of lambda^(n-k) in det(lambda I - rho(X)), k = 0..n, as Gaussian
/// polynomials in the coordinates of X.
std::vector<GaussPoly> characteristic_coefficients(const LieAlgebra& g);

}  // namespace eqdc

namespace eqdc {

/// Names of the coordinate functions on g used for printing polynomials:
/// "u" for one-dimensional g, "u1", "u2", ... otherwise.
std::vector<std::string> coordinate_names(const LieAlgebra& g);

}  // namespace eqdc
