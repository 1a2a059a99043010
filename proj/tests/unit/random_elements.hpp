#pragma once

#include "eqdc/gca/algebra.hpp"
#include "eqdc/gca/derivation.hpp"
#include "unit/random_gen.hpp"

namespace eqdc::testing {

/// Random homogeneous element of degree n built from up to `terms` basis monomials.
inline Element random_element(Gen& gen, const AlgebraPtr& alg, int n, std::size_t terms = 3) {
  auto basis = alg->degree_basis(n);
  Element e(alg);
  if (basis.empty()) return e;
  for (std::size_t t = 0; t < terms; ++t) e.add_term(basis[gen.index(basis.size())], gen.rational());
  return e;
}

/// Random derivation of the given degree (images random homogeneous elements).
inline Derivation random_derivation(Gen& gen, const AlgebraPtr& alg, int degree) {
  std::vector<Element> images;
  for (const auto& g : alg->generators()) images.push_back(random_element(gen, alg, g.degree + degree, 2));
  return Derivation(alg, degree, std::move(images));
}

/// Coefficient of t^n in prod_{odd}(1 + t^d) prod_{even, d > 0} 1 / (1 - t^d).
inline std::size_t poincare_count(const AlgebraPtr& alg, int n) {
  std::vector<Integer> series(n + 1, 0);
  series[0] = 1;
  for (const auto& g : alg->generators()) {
    const int d = g.degree;
    if (d % 2 != 0) {
      for (int k = n; k >= d; --k) series[k] += series[k - d];
    } else {
      for (int k = d; k <= n; ++k) series[k] += series[k - d];
    }
  }
  return series[n].get_ui();
}

}  // namespace eqdc::testing
