#include "eqdc/chern/chern_weil.hpp"

#include "eqdc/error.hpp"

namespace eqdc {

Element evaluate_on(const RationalPoly& p, const std::vector<Element>& values,
                    const AlgebraPtr& algebra) {
  if (values.size() != p.nvars()) throw DimensionMismatch("one value per polynomial variable");
  for (const auto& v : values) {
    auto deg = v.degree();
    if (deg && *deg % 2 != 0) throw DegreeMismatch("polynomials are evaluated on even elements");
  }
  Element out(algebra);
  for (const auto& [e, q] : p.terms()) {
    Element term = Element::scalar(algebra, q);
    for (std::size_t a = 0; a < e.size() && !term.is_zero(); ++a) term = term * power(values[a], e[a]);
    out += term;
  }
  return out;
}

void require_invariant(const LieAlgebra& g, const InvariantPolynomial& w) {
  if (w.poly.nvars() != g.dim()) {
    throw NotInvariant("polynomial '" + w.name + "' has the wrong number of variables for " + g.name());
  }
  if (!is_invariant(g, w.poly)) {
    throw NotInvariant("polynomial '" + to_string(w.poly, coordinate_names(g)) +
                       "' is not invariant under " + g.name());
  }
}

Element chern_weil(const InvariantPolynomial& w, const GStarAlgebra& a, const Connection& theta) {
  require_invariant(theta.lie, w);
  return evaluate_on(w.poly, curvature(a, theta), a.carrier);
}

TransgressionRing::TransgressionRing(const WeilAlgebra& weil) : weil_(&weil) {
  AlgebraPtr interval = GradedAlgebra::make({Generator{"t", 0, std::nullopt, 0}, Generator{"dt", 1, std::nullopt, 0}});
  product_ = tensor(interval, weil.algebra());
  Derivation d_interval(interval, 1, {Element::generator(interval, 1), Element(interval)});
  d_ = product_.extend_left(d_interval) + product_.extend_right(weil.gstar.d);
}

std::vector<Element> TransgressionRing::theta_t() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < weil_->dim(); ++a) out.push_back(t() * lift(weil_->theta_gen(a)));
  return out;
}

std::vector<Element> TransgressionRing::omega_t() const {
  return curvature_form(d_, weil_->gstar.lie, theta_t());
}

Element TransgressionRing::integrate(const Element& x) const {
  Element out(weil_->algebra());
  for (const auto& [m, q] : x.terms()) {
    if (m[1] != 1) continue;
    out.add_term(Monomial(m.begin() + 2, m.end()), q / Rational(long(m[0]) + 1));
  }
  return out;
}

Element chern_simons(const InvariantPolynomial& w, const WeilAlgebra& weil) {
  require_invariant(weil.gstar.lie, w);
  TransgressionRing ring(weil);
  return ring.integrate(evaluate_on(w.poly, ring.omega_t(), ring.algebra()));
}

Element chern_simons(const InvariantPolynomial& w, const LieAlgebra& g) {
  return chern_simons(w, build_weil(g));
}

}  // namespace eqdc
