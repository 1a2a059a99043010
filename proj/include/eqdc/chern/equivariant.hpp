#pragma once

#include <string>
#include <vector>

#include "eqdc/gstar/weil.hpp"
#include "eqdc/liealg/invariant.hpp"

namespace eqdc {

/// The same algebra acted on by a larger Lie algebra `sum` whose basis
/// contains a.lie's basis at slots offset..; the other contractions are zero.
GStarAlgebra extend_action(const GStarAlgebra& a, const LieAlgebra& sum, std::size_t offset);

/// A (x) B over a common Lie algebra with d and iota acting on both factors.
struct GStarTensor {
  TensorProduct product;
  GStarAlgebra total;
};
/// Throws CarrierMismatch if the Lie algebras differ.
GStarTensor tensor_gstar(const GStarAlgebra& a, const GStarAlgebra& b);

/// W(g) (x) A for a (g + k)-algebra A together with a k-connection Theta on A.
/// All element fields live in model.total.
struct EquivariantConnection {
  LieAlgebra g;
  LieAlgebra k;
  WeilAlgebra weil_g;
  GStarAlgebra base;   // A, over g + k
  Connection theta;    // k-connection on A, offset dim g
  GStarTensor model;   // W(g) (x) A, over g + k
  std::vector<Element> theta_G;         // Theta - iota_{theta_g} Theta
  std::vector<Element> omega_G_weil;    // d Theta_G + 1/2 [Theta_G, Theta_G]
  std::vector<Element> omega_G_cartan;  // Omega - iota_{Omega_g} Theta

  const GStarAlgebra& total() const { return model.total; }
  /// sum_a theta^a iota^A_a over the g directions.
  Derivation iota_theta() const;
  /// exp(iota_theta)(x).
  Element mathai_quillen(const Element& x) const;
};

/// Builds Theta_G, Omega_G and the Cartan curvature. Throws NotAConnection if
/// Theta is not a k-connection on A or if any of the checks in
/// equivariant_connection_defects fails.
EquivariantConnection equivariant_connection(const LieAlgebra& g, const LieAlgebra& k,
                                             const GStarAlgebra& a, const Connection& theta);

/// g-horizontality and invariance of Theta_G and Omega_G, Theta_G being a
/// k-connection, and exp(iota_theta) Omega_G = Omega_G^Cartan.
std::vector<std::string> equivariant_connection_defects(const EquivariantConnection& ec);

/// w(Omega_G), w a polynomial on k. Throws NotInvariant.
Element equivariant_chern_weil(const InvariantPolynomial& w, const EquivariantConnection& ec);
/// w(Omega_G^Cartan).
Element equivariant_chern_weil_cartan(const InvariantPolynomial& w, const EquivariantConnection& ec);

/// W(k) -> W(g) (x) A, theta_k -> Theta_G, u_k -> Omega_G.
AlgebraMap equivariant_weil_map(const EquivariantConnection& ec, const WeilAlgebra& weil_k);
/// Image of chern_simons(w) under equivariant_weil_map.
Element equivariant_chern_simons(const InvariantPolynomial& w, const EquivariantConnection& ec);

/// (Theta_P, Theta_Q - sum_a Theta_P^a iota^g_a Theta_Q) on A_P (x) Q.
struct PullbackConnection {
  GStarTensor model;      // over g + k
  Connection connection;  // lie g + k, offset 0
};
/// a_p is over g, q over g + k with theta_q a k-connection at offset dim g.
/// Throws NotAConnection if an input or the output fails the axioms.
PullbackConnection pullback_connection(const GStarAlgebra& a_p, const Connection& theta_p,
                                       const GStarAlgebra& q, const Connection& theta_q);

/// W(g) (x) W(k) (x) A -> W(g) (x) A substituting theta_k -> Theta_G and
/// u_k -> Omega_G, together with the inclusion in the other direction.
struct ReductionMap {
  WeilAlgebra weil_k;
  GStarAlgebra source;  // over g + k
  AlgebraMap map;
  AlgebraMap inclusion;
};
ReductionMap theta_g_star(const EquivariantConnection& ec);
/// Chain-map property and basic-to-basic through max_degree, and
/// map o inclusion = id on generators.
std::vector<std::string> reduction_defects(const EquivariantConnection& ec, const ReductionMap& r,
                                           int max_degree);

/// W(phi) (x) F : W(g2) (x) N -> W(g1) (x) M for phi: g1 -> g2 given by its
/// matrix (column i = phi(xi_i) in the basis of g2).
struct AssociatedMap {
  WeilTensor source;  // W(g2) (x) N
  WeilTensor target;  // W(g1) (x) M
  AlgebraMap map;
};
/// Throws NotAHomomorphism if phi does not preserve brackets or F does not
/// commute with d.
AssociatedMap associated_forms(const RationalMatrix& phi, const AlgebraMap& f,
                               const GStarAlgebra& n, const GStarAlgebra& m);
/// Chain-map property and basic-to-basic through max_degree.
std::vector<std::string> associated_defects(const AssociatedMap& a, int max_degree);

}  // namespace eqdc
