#pragma once

#include <string>
#include <vector>

#include "eqdc/gstar/gstar.hpp"
#include "eqdc/liealg/polynomial.hpp"

namespace eqdc {

/// Generator names of W(g): "theta"/"u" when dim g = 1, else "theta1".., "u1"..,
/// each followed by `suffix`.
std::vector<std::string> weil_theta_names(const LieAlgebra& g, const std::string& suffix = "");
std::vector<std::string> weil_u_names(const LieAlgebra& g, const std::string& suffix = "");

struct WeilAlgebra {
  GStarAlgebra gstar;
  Connection theta;  // theta_g = sum theta^a xi_a
  Derivation d_lie;      // Chevalley-Eilenberg part d_g
  Derivation d_koszul;   // theta^a -> u^a, u^a -> 0

  const AlgebraPtr& algebra() const { return gstar.carrier; }
  std::size_t dim() const { return gstar.lie.dim(); }
  Element theta_gen(std::size_t a) const { return Element::generator(algebra(), a); }
  Element u_gen(std::size_t a) const { return Element::generator(algebra(), dim() + a); }
  /// The polynomial in the coordinates x^a read as an element of S g* (x^a -> u^a).
  Element from_polynomial(const RationalPoly& p) const;
};

/// W(g) with d_W theta^a = -1/2 c^a_bc theta^b theta^c + u^a and d_W u^a fixed by
/// d_W^2 = 0. Throws InvalidLieAlgebra for invalid g.
WeilAlgebra build_weil(const LieAlgebra& g, const std::string& suffix = "");

struct WeilHomomorphism {
  WeilAlgebra weil;
  AlgebraMap map;  // W(lie) -> carrier
};

/// theta^a -> Theta^a, u^a -> Omega^a. Throws NotAConnection.
WeilHomomorphism weil_homomorphism(const GStarAlgebra& a, const Connection& theta);

/// Checks f d_W = d f and f iota^W_a = iota_{offset+a} f on the basis of W
/// through max_degree. Returns failure descriptions.
std::vector<std::string> weil_homomorphism_defects(const GStarAlgebra& a, const Connection& theta,
                                                   const WeilHomomorphism& f, int max_degree);

/// W(g) (x) M for a G*-algebra M over the same Lie algebra; W generators come first.
struct WeilTensor {
  WeilAlgebra weil;
  GStarAlgebra model;
  TensorProduct product;
  GStarAlgebra total;

  std::size_t weil_size() const { return weil.algebra()->size(); }
  /// iota^M_a, d_M extended to the tensor product.
  Derivation model_iota(std::size_t a) const { return product.extend_right(model.iota[a]); }
  Derivation model_d() const { return product.extend_right(model.d); }
  /// True if the element involves no theta generator.
  bool theta_free(const Element& e) const;
};

WeilTensor weil_model(const GStarAlgebra& model, const std::string& weil_suffix = "");

/// Recognizes a G*-algebra whose first generators form W(lie) with the Weil
/// structure and whose remaining generators are closed under d and iota.
/// Throws NoWeilFactor otherwise.
WeilTensor as_weil_tensor(const GStarAlgebra& a);

/// exp(+/- iota_theta) with iota_theta = sum_a theta^a iota^M_a.
class MathaiQuillen {
 public:
  explicit MathaiQuillen(const WeilTensor& w);
  const Derivation& iota_theta() const { return iota_theta_; }
  /// exp(sign * iota_theta)(x); the series terminates because iota_theta is nilpotent.
  Element exp(const Element& x, int sign = 1) const;
  Element forward(const Element& x) const { return exp(x, 1); }
  Element inverse(const Element& x) const { return exp(x, -1); }
  /// exp(iota_theta) d exp(-iota_theta) x.
  Element conjugated_d(const Element& x) const;

 private:
  WeilTensor w_;
  Derivation iota_theta_;
};

/// d_C = 1 (x) d_M - sum_a u^a iota^M_a on the theta-free part.
Derivation cartan_differential(const WeilTensor& w);

/// Basis of the G-invariant theta-free elements of degree n.
std::vector<Element> cartan_basis(const WeilTensor& w, int n);

}  // namespace eqdc
