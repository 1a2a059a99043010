#pragma once

#include <vector>

#include "eqdc/gstar/weil.hpp"
#include "eqdc/liealg/invariant.hpp"

namespace eqdc {

/// p(values): sum over terms c * prod values[a]^e_a. Values must be even.
Element evaluate_on(const RationalPoly& p, const std::vector<Element>& values,
                    const AlgebraPtr& algebra);

/// Throws NotInvariant unless every L_a kills the polynomial.
void require_invariant(const LieAlgebra& g, const InvariantPolynomial& w);

/// w(Omega^k) for the curvature of theta. Throws NotInvariant, NotAConnection.
Element chern_weil(const InvariantPolynomial& w, const GStarAlgebra& a, const Connection& theta);

/// Lambda[t, dt] (x) W(g) with d t = dt; t and dt come first.
class TransgressionRing {
 public:
  explicit TransgressionRing(const WeilAlgebra& weil);

  const AlgebraPtr& algebra() const { return product_.algebra; }
  const Derivation& d() const { return d_; }
  Element t() const { return Element::generator(algebra(), 0); }
  Element dt() const { return Element::generator(algebra(), 1); }
  Element lift(const Element& w) const { return product_.right(w); }
  /// theta_t = t theta and its curvature
  /// Omega_t = dt theta + t Omega + 1/2 (t^2 - t) [theta, theta].
  std::vector<Element> theta_t() const;
  std::vector<Element> omega_t() const;
  /// Integral over [0, 1]: keeps the terms t^m dt a and sends them to a / (m + 1).
  Element integrate(const Element& x) const;

 private:
  const WeilAlgebra* weil_;
  TensorProduct product_;
  Derivation d_;
};

/// CS_w = integral over [0,1] of w(Omega_t^k), an element of W^{2k-1}(g).
/// Throws NotInvariant.
Element chern_simons(const InvariantPolynomial& w, const WeilAlgebra& weil);
/// Same, in a freshly built W(g).
Element chern_simons(const InvariantPolynomial& w, const LieAlgebra& g);

}  // namespace eqdc
