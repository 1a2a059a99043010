#include "doctest.h"
#include "eqdc/chern/chern_weil.hpp"
#include "eqdc/chern/equivariant.hpp"
#include "eqdc/chern/instances.hpp"
#include "eqdc/chern/witness.hpp"
#include "eqdc/error.hpp"
#include "eqdc/gstar/models.hpp"
#include "unit/random_elements.hpp"

using namespace eqdc;

namespace {

InvariantPolynomial poly_of(const LieAlgebra& g, const RationalPoly& p, const std::string& name = "w") {
  return {name, p, GaussRational(Rational(1))};
}

InvariantPolynomial u_power(const LieAlgebra& g, unsigned k) {
  RationalPoly p(1);
  p.add_term({k}, 1);
  return poly_of(g, p, "u^" + std::to_string(k));
}

// Generators through degree 3 plus all their products of degree <= 3.
std::vector<InvariantPolynomial> polys_through_3(const LieAlgebra& g) {
  auto gens = invariant_generators(g, 3);
  std::vector<InvariantPolynomial> out = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (gens[i].degree() + gens[j].degree() <= 3) out.push_back(gens[i] * gens[j]);
      for (std::size_t l = j; l < gens.size(); ++l) {
        if (gens[i].degree() + gens[j].degree() + gens[l].degree() <= 3) {
          out.push_back(gens[i] * gens[j] * gens[l]);
        }
      }
    }
  }
  return out;
}

void require_basic(const GStarAlgebra& a, const Element& x) {
  for (std::size_t i = 0; i < a.lie.dim(); ++i) {
    CHECK(a.iota[i](x).is_zero());
    CHECK(a.lie_derivs[i](x).is_zero());
  }
}

// Copies an element into another algebra with the same generators.
Element transplant(const Element& x, const AlgebraPtr& to) {
  Element out(to);
  for (const auto& [m, q] : x.terms()) out.add_term(m, q);
  return out;
}

Element gen(const AlgebraPtr& alg, const std::string& name) { return Element::generator(alg, name); }

}  // namespace

TEST_CASE("Chern-Weil of the universal connection") {
  LieAlgebra g = builtin::u1();
  WeilAlgebra w = build_weil(g);
  CHECK(chern_weil(u_power(g, 2), w.gstar, w.theta) == w.u_gen(0) * w.u_gen(0));
}

TEST_CASE("abelian linear polynomial returns the curvature") {
  LieAlgebra g = builtin::r2();
  WeilAlgebra w = build_weil(g);
  auto omega = curvature(w.gstar, w.theta);
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(chern_weil(poly_of(g, RationalPoly::variable(2, a)), w.gstar, w.theta) == omega[a]);
  }
}

TEST_CASE("Maurer-Cartan connection is flat") {
  for (auto name : {"u1", "r2", "su2", "u2"}) {
    CAPTURE(name);
    LieAlgebra g = builtin::lie_by_name(name);
    GStarAlgebra mc = builtin::invariant_forms(g);
    Connection theta{g, {}, 0};
    for (std::size_t a = 0; a < g.dim(); ++a) theta.components.push_back(Element::generator(mc.carrier, a));
    for (const auto& w : invariant_generators(g, 2)) CHECK(chern_weil(w, mc, theta).is_zero());
  }
}

TEST_CASE("Chern-Weil rejects bad input") {
  LieAlgebra g = builtin::su2();
  WeilAlgebra w = build_weil(g);
  CHECK_THROWS_AS(chern_weil(poly_of(g, RationalPoly::variable(3, 0)), w.gstar, w.theta), NotInvariant);
  Connection zero{g, std::vector<Element>(3, Element(w.algebra())), 0};
  CHECK_THROWS_AS(chern_weil(invariant_generators(g, 2)[0], w.gstar, zero), NotAConnection);
}

TEST_CASE("Chern-Weil forms are closed and basic") {
  for (auto name : {"u1", "r2", "su2", "u2"}) {
    CAPTURE(name);
    LieAlgebra g = builtin::lie_by_name(name);
    WeilAlgebra w = build_weil(g);
    for (const auto& p : polys_through_3(g)) {
      Element cw = chern_weil(p, w.gstar, w.theta);
      CHECK(cw == w.from_polynomial(p.poly));
      CHECK(w.gstar.d(cw).is_zero());
      require_basic(w.gstar, cw);
    }
  }
}

TEST_CASE("Chern-Weil on the rotation model") {
  // Theta = lambda_M is a flat connection: c_1 = 0
  GStarAlgebra rot = builtin::circle_rotation();
  Connection theta{builtin::u1(), {Element::generator(rot.carrier, 0)}, 0};
  CHECK(chern_weil(u_power(builtin::u1(), 1), rot, theta).is_zero());
}

TEST_CASE("transgression ring") {
  WeilAlgebra w = build_weil(builtin::su2());
  TransgressionRing ring(w);
  Element t = ring.t();
  Element dt = ring.dt();
  CHECK(ring.d()(t) == dt);
  CHECK(ring.d()(dt).is_zero());
  CHECK((dt * dt).is_zero());
  Element x = ring.lift(w.theta_gen(0));
  for (unsigned m = 0; m < 5; ++m) {
    CHECK(ring.integrate(power(t, m) * dt * x) == Rational(1, long(m) + 1) * w.theta_gen(0));
    CHECK(ring.integrate(power(t, m) * x).is_zero());
  }
  // Omega_t = dt theta + t Omega + 1/2 (t^2 - t) [theta, theta]
  const LieAlgebra& g = w.gstar.lie;
  auto omega_t = ring.omega_t();
  for (std::size_t a = 0; a < 3; ++a) {
    Element bracket(ring.algebra());
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        bracket += g.structure(a, b, c) * (ring.lift(w.theta_gen(b)) * ring.lift(w.theta_gen(c)));
      }
    }
    Element want = dt * ring.lift(w.theta_gen(a)) + t * ring.lift(w.u_gen(a)) +
                   Rational(1, 2) * (t * t - t) * bracket;
    CHECK(omega_t[a] == want);
  }
}

TEST_CASE("abelian Chern-Simons is theta u^(k-1)") {
  LieAlgebra g = builtin::u1();
  WeilAlgebra w = build_weil(g);
  for (unsigned k = 1; k <= 4; ++k) {
    CAPTURE(k);
    Element cs = chern_simons(u_power(g, k), w);
    CHECK(cs == w.theta_gen(0) * power(w.u_gen(0), k - 1));
    CHECK(w.gstar.d(cs) == power(w.u_gen(0), k));
  }
  CHECK(chern_simons(u_power(g, 2), g).to_string() == "theta*u");
}

TEST_CASE("d_W CS = w through degree 3") {
  for (auto name : {"u1", "r2", "su2", "u2"}) {
    CAPTURE(name);
    LieAlgebra g = builtin::lie_by_name(name);
    WeilAlgebra w = build_weil(g);
    for (const auto& p : polys_through_3(g)) {
      CAPTURE(p.name);
      Element cs = chern_simons(p, w);
      CHECK(cs.is_homogeneous_of(2 * int(p.degree()) - 1));
      CHECK(w.gstar.d(cs) == w.from_polynomial(p.poly));
      for (std::size_t a = 0; a < g.dim(); ++a) CHECK(w.gstar.lie_derivs[a](cs).is_zero());
    }
  }
}

TEST_CASE("su(2) Chern-Simons matches <theta, u> - 1/6 <theta, [theta, theta]>") {
  LieAlgebra g = builtin::su2();
  WeilAlgebra w = build_weil(g);
  InvariantPolynomial casimir = invariant_generators(g, 2)[0];
  Element want(w.algebra());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      Rational bab = casimir.polarized({a, b});
      if (bab == 0) continue;
      want += bab * (w.theta_gen(a) * w.u_gen(b));
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = 0; d < 3; ++d) {
          if (g.structure(b, c, d) == 0) continue;
          want -= Rational(1, 6) * bab * g.structure(b, c, d) *
                  (w.theta_gen(a) * w.theta_gen(c) * w.theta_gen(d));
        }
      }
    }
  }
  CHECK(chern_simons(casimir, w) == want);
}

TEST_CASE("Chern-Simons rejects non-invariant polynomials") {
  LieAlgebra g = builtin::su2();
  CHECK_THROWS_AS(chern_simons(poly_of(g, RationalPoly::variable(3, 1)), g), NotInvariant);
}

TEST_CASE("rotation instance") {
  auto inst = builtin::rotation_instance();
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  const AlgebraPtr& alg = ec.total().carrier;
  Element lambda = gen(alg, "lambda_M");
  Element theta = gen(alg, "theta");
  Element u = gen(alg, "u");
  CHECK(ec.theta_G[0] == lambda - theta);
  CHECK(ec.omega_G_weil[0] == -u);
  CHECK(ec.omega_G_cartan[0] == -u);
  CHECK(ec.total().iota[0](ec.theta_G[0]).is_zero());
  CHECK(equivariant_connection_defects(ec).empty());

  LieAlgebra k = inst.k;
  CHECK(equivariant_chern_weil(u_power(k, 1), ec) == -u);
  CHECK(equivariant_chern_weil(u_power(k, 2), ec) == u * u);
  CHECK(equivariant_chern_weil_cartan(u_power(k, 1), ec) == -u);

  Element cs1 = equivariant_chern_simons(u_power(k, 1), ec);
  CHECK(cs1 == lambda - theta);
  CHECK(ec.total().d(cs1) == -u);
  Element cs2 = equivariant_chern_simons(u_power(k, 2), ec);
  CHECK(cs2 == (lambda - theta) * (-u));
  CHECK(ec.total().d(cs2) == u * u);
}

TEST_CASE("equivariant Chern-Weil and Chern-Simons on product instances") {
  std::vector<std::pair<const char*, const char*>> pairs = {{"u1", "u1"}, {"u1", "su2"}, {"su2", "u2"}};
  for (auto [gn, kn] : pairs) {
    CAPTURE(gn);
    CAPTURE(kn);
    auto inst = builtin::product_instance(builtin::lie_by_name(gn), builtin::lie_by_name(kn));
    EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
    CHECK(equivariant_connection_defects(ec).empty());
    const TensorProduct& tp = ec.model.product;
    for (std::size_t a = 0; a < inst.k.dim(); ++a) CHECK(ec.theta_G[a] == tp.right(inst.theta.components[a]));

    WeilAlgebra weil_k = build_weil(inst.k, "_k");
    for (const auto& p : invariant_generators(inst.k, 2)) {
      Element cw = equivariant_chern_weil(p, ec);
      CHECK(ec.total().d(cw).is_zero());
      require_basic(ec.total(), cw);
      Element cs = equivariant_chern_simons(p, ec);
      CHECK(ec.total().d(cs) == cw);
      Element classical = transplant(chern_simons(p, weil_k), inst.algebra.carrier);
      CHECK(cs == tp.right(classical));
    }
  }
}

TEST_CASE("flat K-factor gives zero equivariant classes") {
  auto inst = builtin::flat_instance(builtin::u1(), builtin::su2());
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  CHECK(equivariant_connection_defects(ec).empty());
  for (const auto& p : invariant_generators(inst.k, 2)) CHECK(equivariant_chern_weil(p, ec).is_zero());
}

TEST_CASE("equivariant connection rejects a non-connection") {
  auto inst = builtin::rotation_instance();
  Connection bad = inst.theta;
  bad.components[0] = 2 * bad.components[0];
  CHECK_THROWS_AS(equivariant_connection(inst.g, inst.k, inst.algebra, bad), NotAConnection);
}

TEST_CASE("pullback connection on the rotation instance") {
  auto inst = builtin::rotation_instance();
  WeilAlgebra wg = build_weil(inst.g);
  PullbackConnection pc = pullback_connection(wg.gstar, wg.theta, inst.algebra, inst.theta);
  const AlgebraPtr& alg = pc.model.total.carrier;
  REQUIRE(pc.connection.components.size() == 2);
  CHECK(pc.connection.components[0] == gen(alg, "theta"));
  CHECK(pc.connection.components[1] == gen(alg, "lambda_M") - gen(alg, "theta"));
  // iota_{xi_1 + xi_2} returns (xi_1, xi_2) on every basis pair
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(pc.model.total.iota[a](pc.connection.components[b]) == Element::scalar(alg, a == b ? 1 : 0));
    }
  }
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  CHECK(pc.connection.components[1].to_string() == ec.theta_G[0].to_string());
}

TEST_CASE("pullback connection leaves g-horizontal data alone") {
  auto inst = builtin::product_instance(builtin::su2(), builtin::u1());
  WeilAlgebra wg = build_weil(inst.g);
  PullbackConnection pc = pullback_connection(wg.gstar, wg.theta, inst.algebra, inst.theta);
  const TensorProduct& tp = pc.model.product;
  CHECK(pc.connection.components[3] == tp.right(inst.theta.components[0]));
  for (std::size_t a = 0; a < 3; ++a) CHECK(pc.connection.components[a] == tp.left(wg.theta_gen(a)));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      CHECK(pc.model.total.iota[a](pc.connection.components[b]) ==
            Element::scalar(pc.model.total.carrier, a == b ? 1 : 0));
    }
  }
  Connection bad = wg.theta;
  bad.components[0] = Element(wg.algebra());
  CHECK_THROWS_AS(pullback_connection(wg.gstar, bad, inst.algebra, inst.theta), NotAConnection);
}

TEST_CASE("Theta_G^* on the rotation instance") {
  auto inst = builtin::rotation_instance();
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  ReductionMap r = theta_g_star(ec);
  const AlgebraPtr& src = r.source.carrier;
  const AlgebraPtr& tgt = ec.total().carrier;
  CHECK(r.map(gen(src, "u_k")) == -gen(tgt, "u"));
  CHECK(r.map(gen(src, "theta_k")) == gen(tgt, "lambda_M") - gen(tgt, "theta"));
  CHECK(r.map(gen(src, "theta") * gen(src, "lambda_M")) == gen(tgt, "theta") * gen(tgt, "lambda_M"));
  CHECK(reduction_defects(ec, r, 4).empty());
}

TEST_CASE("Theta_G^* on product instances") {
  auto inst = builtin::product_instance(builtin::u1(), builtin::su2());
  EquivariantConnection ec = equivariant_connection(inst.g, inst.k, inst.algebra, inst.theta);
  ReductionMap r = theta_g_star(ec);
  CHECK(r.source.carrier->find("theta1_k2"));
  CHECK(reduction_defects(ec, r, 3).empty());
}

TEST_CASE("associated forms") {
  LieAlgebra g = builtin::u1();
  SUBCASE("identity") {
    GStarAlgebra n = builtin::circle_rotation();
    AssociatedMap a = associated_forms(RationalMatrix::identity(1), AlgebraMap::identity(n.carrier), n, n);
    for (std::size_t i = 0; i < a.source.total.carrier->size(); ++i) {
      CHECK(a.map.image(i) == Element::generator(a.target.total.carrier, i));
    }
    CHECK(associated_defects(a, 4).empty());
  }
  SUBCASE("weight two") {
    GStarAlgebra n = builtin::trivial_model(g, {Generator{"y", 2, std::nullopt, 0}});
    AssociatedMap a = associated_forms(RationalMatrix{{2}}, AlgebraMap::identity(n.carrier), n, n);
    const AlgebraPtr& t = a.target.total.carrier;
    CHECK(a.map(gen(a.source.total.carrier, "u")) == 2 * gen(t, "u"));
    CHECK(a.map(gen(a.source.total.carrier, "theta")) == 2 * gen(t, "theta"));
    CHECK(associated_defects(a, 4).empty());
  }
  SUBCASE("zero map") {
    GStarAlgebra n = builtin::trivial_model(builtin::su2(), {});
    GStarAlgebra m = builtin::trivial_model(g, {});
    AssociatedMap a = associated_forms(RationalMatrix(3, 1), AlgebraMap(n.carrier, m.carrier, {}), n, m);
    for (std::size_t i = 0; i < 6; ++i) CHECK(a.map.image(i).is_zero());
    CHECK(associated_defects(a, 4).empty());
    // Chern-Weil classes pull back to zero
    WeilAlgebra w = a.source.weil;
    Element c2 = a.source.product.left(w.from_polynomial(invariant_generators(builtin::su2(), 2)[0].poly));
    CHECK(a.map(c2).is_zero());
  }
  SUBCASE("not a homomorphism") {
    GStarAlgebra n = builtin::trivial_model(builtin::su2(), {});
    RationalMatrix twice = RationalMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) twice.set(i, i, 2);
    CHECK_THROWS_AS(associated_forms(twice, AlgebraMap::identity(n.carrier), n, n), NotAHomomorphism);
  }
  SUBCASE("F must commute with d") {
    AlgebraPtr alg = GradedAlgebra::make({Generator{"a", 1, std::nullopt, 0}, Generator{"b", 2, std::nullopt, 0}});
    Derivation d(alg, 1, {gen(alg, "b"), Element(alg)});
    GStarAlgebra n = GStarAlgebra::make(alg, g, d, {Derivation::zero(alg, -1)});
    GStarAlgebra m = builtin::trivial_model(g, {Generator{"a", 1, std::nullopt, 0}, Generator{"b", 2, std::nullopt, 0}});
    AlgebraMap f(alg, m.carrier, {gen(m.carrier, "a"), gen(m.carrier, "b")});
    CHECK_THROWS_AS(associated_forms(RationalMatrix::identity(1), f, n, m), NotAHomomorphism);
  }
}

TEST_CASE("injectivity witness") {
  LieAlgebra u1 = builtin::u1();
  auto w1 = weil_injectivity_witness(u1, u_power(u1, 1));
  CHECK(w1.coefficient == 1);
  auto w2 = weil_injectivity_witness(u1, u_power(u1, 2));
  CHECK(w2.coefficient == 2);
  CHECK(w2.indices == std::vector<std::size_t>{0, 0});

  LieAlgebra su2 = builtin::su2();
  InvariantPolynomial casimir = invariant_generators(su2, 2)[0];
  auto ws = weil_injectivity_witness(su2, casimir);
  CHECK(ws.indices == std::vector<std::size_t>{0, 0});
  CHECK(ws.coefficient == 2 * casimir.polarized({0, 0}));
  CHECK(ws.coefficient == Rational(-1, 2));

  CHECK_THROWS_AS(weil_injectivity_witness(u1, poly_of(u1, RationalPoly(1))), NoNonzeroEvaluation);
}

TEST_CASE("injectivity witness on random homogeneous polynomials") {
  testing::Gen rng(41);
  for (auto name : {"r2", "su2", "u2"}) {
    LieAlgebra g = builtin::lie_by_name(name);
    for (int trial = 0; trial < 6; ++trial) {
      unsigned n = unsigned(rng.integer(1, 3));
      RationalPoly p(g.dim());
      for (int t = 0; t < 3; ++t) {
        std::vector<unsigned> e(g.dim(), 0);
        for (unsigned s = 0; s < n; ++s) ++e[rng.index(g.dim())];
        p.add_term(e, rng.rational());
      }
      if (p.is_zero()) continue;
      auto wit = weil_injectivity_witness(g, poly_of(g, p));
      // independent check of n! * polarization: multinomial form of the first nonzero index tuple
      std::vector<unsigned> alpha(g.dim(), 0);
      for (auto i : wit.indices) ++alpha[i];
      Rational expected = p.coefficient(alpha);
      for (auto a : alpha) expected *= Rational(factorial(a));
      CHECK(wit.coefficient == expected);
    }
  }
}
