#include "eqdc/gstar/models.hpp"

#include "eqdc/gstar/weil.hpp"
#include "eqdc/liealg/lie_algebra.hpp"

namespace eqdc::builtin {

GStarAlgebra invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Generator> gens;
  for (std::size_t a = 0; a < n; ++a) {
    gens.push_back({n == 1 ? "lambda" : "lambda" + std::to_string(a + 1), 1, std::pair{0, 1}});
  }
  AlgebraPtr alg = GradedAlgebra::make(gens);
  std::vector<Element> d_images(n, Element(alg));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.structure(a, b, c) != 0) {
          d_images[a] -= Rational(1, 2) * g.structure(a, b, c) *
                         (Element::generator(alg, b) * Element::generator(alg, c));
        }
      }
    }
  }
  std::vector<Derivation> iota;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Element> images(n, Element(alg));
    images[a] = Element::scalar(alg, 1);
    iota.emplace_back(alg, -1, images);
  }
  return GStarAlgebra::make(alg, g, Derivation(alg, 1, d_images), std::move(iota));
}

GStarAlgebra circle_rotation() {
  AlgebraPtr alg = GradedAlgebra::make({{"lambda_M", 1}});
  Derivation iota(alg, -1, {Element::scalar(alg, 1)});
  return GStarAlgebra::make(alg, u1(), Derivation::zero(alg, 1), {iota});
}

GStarAlgebra trivial_model(const LieAlgebra& g, const std::vector<Generator>& generators) {
  AlgebraPtr alg = GradedAlgebra::make(generators);
  std::vector<Derivation> iota(g.dim(), Derivation::zero(alg, -1));
  return GStarAlgebra::make(alg, g, Derivation::zero(alg, 1), std::move(iota));
}

}  // namespace eqdc::builtin
