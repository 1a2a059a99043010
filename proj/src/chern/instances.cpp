#include "eqdc/chern/instances.hpp"

#include "eqdc/chern/equivariant.hpp"
#include "eqdc/gstar/models.hpp"
#include "eqdc/gstar/weil.hpp"

namespace eqdc::builtin {

namespace {

LieAlgebra with_suffix(const LieAlgebra& k, const std::string& suffix) {
  std::vector<std::string> basis;
  for (const auto& b : k.basis()) basis.push_back(b + suffix);
  return renamed(k, k.name() + suffix, basis);
}

ConnectionInstance over_sum(const LieAlgebra& g, const LieAlgebra& k, const GStarAlgebra& k_algebra,
                            std::vector<Element> theta) {
  LieAlgebra sum = direct_sum(g, k, g.name() + "+" + k.name());
  GStarAlgebra a = extend_action(k_algebra, sum, g.dim());
  return {g, k, a, Connection{k, std::move(theta), g.dim()}};
}

}  // namespace

ConnectionInstance rotation_instance() {
  LieAlgebra g = renamed(u1(), "u1_g", {"xi_g"});
  LieAlgebra k = renamed(u1(), "u1_k", {"xi_k"});
  LieAlgebra sum = direct_sum(g, k, "u1_g+u1_k");
  AlgebraPtr alg = GradedAlgebra::make({Generator{"lambda_M", 1, std::nullopt, 0}});
  Derivation one(alg, -1, {Element::scalar(alg, 1)});
  GStarAlgebra a = GStarAlgebra::make(alg, sum, Derivation::zero(alg, 1), {one, one});
  return {g, k, a, Connection{k, {Element::generator(alg, 0)}, 1}};
}

ConnectionInstance product_instance(const LieAlgebra& g, const LieAlgebra& k) {
  LieAlgebra ks = with_suffix(k, "_k");
  WeilAlgebra w = build_weil(ks, "_k");
  return over_sum(g, ks, w.gstar, w.theta.components);
}

ConnectionInstance flat_instance(const LieAlgebra& g, const LieAlgebra& k) {
  LieAlgebra ks = with_suffix(k, "_k");
  GStarAlgebra mc = invariant_forms(ks);
  std::vector<Element> theta;
  for (std::size_t a = 0; a < ks.dim(); ++a) theta.push_back(Element::generator(mc.carrier, a));
  return over_sum(g, ks, mc, theta);
}

}  // namespace eqdc::builtin
