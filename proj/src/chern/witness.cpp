#include "eqdc/chern/witness.hpp"

#include <optional>

#include "eqdc/chern/chern_weil.hpp"
#include "eqdc/error.hpp"
#include "eqdc/gca/derivation.hpp"
#include "eqdc/gstar/gstar.hpp"

namespace eqdc {

namespace {

// Next non-decreasing tuple in [0, dim); false after the last one.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t dim) {
  for (std::size_t p = idx.size(); p-- > 0;) {
    if (idx[p] + 1 < dim) {
      ++idx[p];
      for (std::size_t q = p + 1; q < idx.size(); ++q) idx[q] = idx[p];
      return true;
    }
  }
  return false;
}

}  // namespace

InjectivityWitness weil_injectivity_witness(const LieAlgebra& g, const InvariantPolynomial& w) {
  if (w.poly.is_zero()) throw NoNonzeroEvaluation("the polynomial is zero");
  if (w.poly.nvars() != g.dim()) throw DimensionMismatch("polynomial variables do not match " + g.name());
  const unsigned n = w.degree();
  for (const auto& [e, q] : w.poly.terms()) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    if (deg != n) throw DegreeMismatch("the polynomial is not homogeneous");
  }
  if (n == 0) throw DegreeMismatch("constant polynomials have no witness");

  InjectivityWitness out;
  std::vector<std::size_t> idx(n, 0);
  std::optional<Rational> found;
  do {
    Rational v = w.polarized(idx);
    if (v != 0) {
      found = v;
      break;
    }
  } while (next_tuple(idx, g.dim()));
  if (!found) throw NoNonzeroEvaluation("every polarized value vanishes");
  out.indices = idx;
  out.polarized = *found;
  out.factorial = factorial(n);

  std::vector<Generator> gens;
  for (unsigned j = 1; j <= 2 * n; ++j) gens.push_back({"x" + std::to_string(j), 0, std::nullopt, 1});
  for (unsigned j = 1; j <= 2 * n; ++j) gens.push_back({"dx" + std::to_string(j), 1, std::nullopt, 0});
  out.model = GradedAlgebra::make(gens, 2u);
  const AlgebraPtr& alg = out.model;
  std::vector<Element> d_images;
  for (unsigned j = 0; j < 2 * n; ++j) d_images.push_back(Element::generator(alg, 2 * n + j));
  for (unsigned j = 0; j < 2 * n; ++j) d_images.push_back(Element(alg));
  Derivation d(alg, 1, d_images);

  std::vector<Element> theta(g.dim(), Element(alg));
  for (unsigned m = 0; m < n; ++m) {
    theta[idx[m]] += Element::generator(alg, 2 * m) * Element::generator(alg, 2 * n + 2 * m + 1);
  }
  out.form = evaluate_on(w.poly, curvature_form(d, g, theta), alg);

  Monomial top(4 * n, 0);
  for (unsigned j = 0; j < 2 * n; ++j) top[2 * n + j] = 1;
  out.coefficient = out.form.coefficient(top);
  if (out.coefficient != Rational(out.factorial) * out.polarized) {
    throw ModelInvariantViolation("dx coefficient " + to_string(out.coefficient) + " differs from n! * " +
                                  to_string(out.polarized));
  }
  return out;
}

}  // namespace eqdc
