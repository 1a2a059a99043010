#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqdc/exactlin/abelian_group.hpp"
#include "eqdc/gca/derivation.hpp"
#include "eqdc/liealg/lie_algebra.hpp"

namespace eqdc {

/// Carrier algebra with d, contractions iota_a and Lie derivatives L_a for a
/// basis of `lie`, plus optional degree-0 automorphisms for finite symmetries.
struct GStarAlgebra {
  AlgebraPtr carrier;
  LieAlgebra lie;
  Derivation d;
  std::vector<Derivation> iota;
  std::vector<Derivation> lie_derivs;
  std::vector<AlgebraMap> finite_action;

  /// Fills lie_derivs with the Cartan formula L_a = [d, iota_a].
  static GStarAlgebra make(AlgebraPtr carrier, LieAlgebra lie, Derivation d,
                           std::vector<Derivation> iota);
};

struct GStarViolation {
  std::string relation;  // d^2, iota_anticommute, cartan, lie_iota, lie_d, finite_action
  std::string element;   // basis monomial where the defect was found
  std::string defect;    // the nonzero value
  int degree = 0;
};

struct GStarReport {
  std::vector<GStarViolation> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

/// Sweeps every basis monomial of degree 0..max_degree.
GStarReport check_gstar(const GStarAlgebra& a, int max_degree = 8);

/// sum_a coeffs[a] * D_a as a derivation (degree = |coeff| + |D|).
Derivation contraction_sum(const std::vector<Element>& coeffs, const std::vector<Derivation>& ds);

/// Lie-algebra-valued element of degree 1, Theta = sum Theta^a xi_a, for the
/// Lie algebra `lie` whose basis occupies iota/L slots offset..offset+dim-1 of
/// the ambient G*-algebra.
struct Connection {
  LieAlgebra lie;
  std::vector<Element> components;
  std::size_t offset = 0;
};

/// Connection axioms: iota_{offset+a} Theta^b = delta, L_{offset+a} Theta^b =
/// -sum_e c^b_ae Theta^e, and L_x Theta = 0 for the remaining directions.
/// Returns human-readable failures.
std::vector<std::string> connection_defects(const GStarAlgebra& a, const Connection& theta);
void require_connection(const GStarAlgebra& a, const Connection& theta);

/// Omega^a = d Theta^a + 1/2 sum c^a_bc Theta^b Theta^c, no axioms checked.
std::vector<Element> curvature_form(const Derivation& d, const LieAlgebra& lie,
                                    const std::vector<Element>& theta);
/// Checks the connection axioms (NotAConnection) and afterwards horizontality
/// and equivariance of the result.
std::vector<Element> curvature(const GStarAlgebra& a, const Connection& theta);

/// Rational dimension of H^n of the complex (carrier, d).
std::size_t cohomology_dim(const Derivation& d, int n);

/// Basis (as elements) of degree-n elements killed by every L_a and fixed by
/// every finite symmetry.
std::vector<Element> invariant_subspace(const GStarAlgebra& a, int n);
/// Invariant and killed by every iota_a.
std::vector<Element> basic_subcomplex(const GStarAlgebra& a, int n);
/// dim H^n of the basic subcomplex.
std::size_t basic_cohomology_dim(const GStarAlgebra& a, int n);

}  // namespace eqdc
