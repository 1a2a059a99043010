#include "doctest.h"
#include "eqdc/error.hpp"
#include "eqdc/gca/algebra.hpp"
#include "eqdc/gca/derivation.hpp"
#include "unit/random_elements.hpp"

using namespace eqdc;

namespace {

// Hand-built Weil-type algebra on lambda^a (degree 1) and u^a (degree 2).
AlgebraPtr weil_like(std::size_t dim) {
  std::vector<Generator> gens;
  for (std::size_t a = 1; a <= dim; ++a) {
    gens.push_back({dim == 1 ? "theta" : "theta" + std::to_string(a), 1, std::pair{0, 1}});
  }
  for (std::size_t a = 1; a <= dim; ++a) {
    gens.push_back({dim == 1 ? "u" : "u" + std::to_string(a), 2, std::pair{2, 0}});
  }
  return GradedAlgebra::make(gens);
}

Derivation koszul(const AlgebraPtr& w, std::size_t dim) {
  std::vector<Element> images(w->size(), Element(w));
  for (std::size_t a = 0; a < dim; ++a) images[a] = Element::generator(w, dim + a);
  return Derivation(w, 1, images);
}

Derivation contraction(const AlgebraPtr& w, std::size_t which) {
  std::vector<Element> images(w->size(), Element(w));
  images[which] = Element::scalar(w, 1);
  return Derivation(w, -1, images);
}

}  // namespace

TEST_CASE("Koszul signs for odd generators") {
  auto w = weil_like(3);
  Element l1 = Element::generator(w, "theta1");
  Element l2 = Element::generator(w, "theta2");
  CHECK((l1 * l2).to_string() == "theta1*theta2");
  CHECK(l2 * l1 == -(l1 * l2));
  CHECK((l1 * l1).is_zero());
}

TEST_CASE("hand expansion (u + l1 l2) u") {
  auto w = weil_like(3);
  Element u = Element::generator(w, "u1");
  Element l12 = Element::generator(w, "theta1") * Element::generator(w, "theta2");
  Element lhs = (u + l12) * u;
  Element rhs = u * u + u * l12;
  CHECK(lhs == rhs);
  CHECK(lhs.to_string() == "theta1*theta2*u1 + u1^2");
}

TEST_CASE("derivations on Weil generators") {
  auto w = weil_like(3);
  Derivation dk = koszul(w, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(dk(Element::generator(w, a)) == Element::generator(w, 3 + a));
  }
  Derivation i1 = contraction(w, 0);
  Derivation i2 = contraction(w, 1);
  CHECK(i1(Element::generator(w, "u1")).is_zero());
  Element l12 = Element::generator(w, "theta1") * Element::generator(w, "theta2");
  CHECK(i1(l12) == Element::generator(w, "theta2"));
  CHECK(i2(l12) == -Element::generator(w, "theta1"));
  // d_K(theta1 theta2) = u1 theta2 - theta1 u2
  CHECK(dk(l12) == Element::generator(w, "u1") * Element::generator(w, "theta2") -
                       Element::generator(w, "theta1") * Element::generator(w, "u2"));
  // even powers: d_K(theta1 u1^3) = u1^4
  Element t = Element::generator(w, "theta1") * power(Element::generator(w, "u1"), 3);
  CHECK(dk(t) == power(Element::generator(w, "u1"), 4));
}

TEST_CASE("commutators of derivations") {
  auto w = weil_like(3);
  Derivation dk = koszul(w, 3);
  // d_K^2 = 0, so [d_K, d_K] = 2 d_K^2 = 0
  CHECK(commutator(dk, dk).is_zero());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(commutator(contraction(w, a), contraction(w, b)).is_zero());
    }
  }
  // [d_K, iota_a] theta^b = d_K(delta_ab) + iota_a u^b = 0 and [d_K, iota_a] u^b = 0
  Derivation c = commutator(dk, contraction(w, 0));
  CHECK(c.degree() == 0);
  CHECK(c.is_zero());
}

TEST_CASE("degree bases") {
  auto w1 = weil_like(1);
  auto b2 = w1->degree_basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(w1->monomial_string(b2[0]) == "u");
  auto b3 = w1->degree_basis(3);
  REQUIRE(b3.size() == 1);
  CHECK(w1->monomial_string(b3[0]) == "theta*u");
  auto w3 = weil_like(3);
  CHECK(w3->degree_basis(2).size() == 6);  // C(3,2) + 3
  for (auto alg : {w1, w3, weil_like(4)}) {
    for (int n = 0; n <= 8; ++n) CHECK(alg->degree_basis(n).size() == testing::poincare_count(alg, n));
  }
}

TEST_CASE("degree-0 generators need a weight cap") {
  auto a = GradedAlgebra::make({{"x", 0}, {"dx", 1}});
  CHECK_THROWS_AS(a->degree_basis(1), InfiniteBasis);
  auto b = GradedAlgebra::make({{"x", 0, std::nullopt, 1}, {"dx", 1}}, 2);
  CHECK(b->degree_basis(0).size() == 3);  // 1, x, x^2
  Element x = Element::generator(b, "x");
  CHECK(power(x, 3).is_zero());
}

TEST_CASE("tensor products") {
  auto w1 = weil_like(1);
  auto lm = GradedAlgebra::make({{"lambda_M", 1}});
  TensorProduct t = tensor(w1, lm);
  std::vector<std::string> names;
  for (const auto& m : t.algebra->degree_basis(2)) names.push_back(t.algebra->monomial_string(m));
  CHECK(names == std::vector<std::string>{"theta*lambda_M", "u"});

  auto x3 = GradedAlgebra::make({{"x3", 3}});
  TensorProduct t2 = tensor(w1, x3);
  std::vector<Element> dw_images{Element::generator(w1, "u"), Element(w1)};
  Derivation dw(w1, 1, dw_images);
  Derivation total = t2.extend_left(dw) + t2.extend_right(Derivation::zero(x3, 1));
  for (int n = 0; n <= 8; ++n) {
    for (const auto& m : t2.algebra->degree_basis(n)) {
      CHECK(total(total(Element::monomial(t2.algebra, m))).is_zero());
    }
  }

  CHECK_THROWS_AS(tensor(w1, w1), NameCollision);
  TensorProduct t3 = tensor(w1, w1, "g.", "k.");
  CHECK(t3.algebra->find("k.u").has_value());

  // associativity up to renaming: same generator list
  auto a = tensor(tensor(w1, lm).algebra, x3).algebra;
  auto b = tensor(w1, tensor(lm, x3).algebra).algebra;
  CHECK(a->same_structure(*b));
}

TEST_CASE("Koszul sign across tensor factors") {
  auto a = GradedAlgebra::make({{"a", 1}});
  auto b = GradedAlgebra::make({{"b", 1}});
  TensorProduct t = tensor(a, b);
  // a contraction on the b factor picks up (-1)^{|iota||a|} passing a
  Element ab = t.left(Element::generator(a, 0)) * t.right(Element::generator(b, 0));
  std::vector<Element> iota_images{Element(t.algebra), Element::scalar(t.algebra, 1)};
  Derivation iota_b(t.algebra, -1, iota_images);
  CHECK(iota_b(ab) == -t.left(Element::generator(a, 0)));
}

TEST_CASE("carrier mismatch") {
  auto w1 = weil_like(1);
  auto w3 = weil_like(3);
  CHECK_THROWS_AS(Element::generator(w1, 0) * Element::generator(w3, 0), CarrierMismatch);
  auto w1b = weil_like(1);
  CHECK_NOTHROW(Element::generator(w1, 0) * Element::generator(w1b, 1));
  CHECK_THROWS_AS(koszul(w3, 3)(Element::generator(w1, 0)), CarrierMismatch);
}

TEST_CASE("derivation images must have the right degree") {
  auto w1 = weil_like(1);
  std::vector<Element> bad{Element::generator(w1, "theta"), Element(w1)};
  CHECK_THROWS_AS(Derivation(w1, 1, bad), DegreeMismatch);
}

TEST_CASE("random: associativity and graded commutativity in W(su(2))") {
  auto w = weil_like(3);
  testing::Gen gen(21);
  for (int t = 0; t < 60; ++t) {
    int da = gen.integer(0, 6), db = gen.integer(0, 6 - da), dc = gen.integer(0, 6 - da - db);
    Element a = testing::random_element(gen, w, da);
    Element b = testing::random_element(gen, w, db);
    Element c = testing::random_element(gen, w, dc);
    CHECK((a * b) * c == a * (b * c));
    Rational sign = (da * db) % 2 == 0 ? 1 : -1;
    CHECK(a * b == sign * (b * a));
  }
}

TEST_CASE("random: Leibniz rule for derivations") {
  auto w = weil_like(3);
  testing::Gen gen(33);
  for (int t = 0; t < 60; ++t) {
    int deg = gen.integer(-1, 2);
    Derivation d = testing::random_derivation(gen, w, deg);
    int da = gen.integer(0, 4), db = gen.integer(0, 4);
    Element a = testing::random_element(gen, w, da);
    Element b = testing::random_element(gen, w, db);
    Rational sign = (deg * da) % 2 == 0 ? 1 : -1;
    CHECK(d(a * b) == d(a) * b + sign * (a * d(b)));
  }
}

TEST_CASE("random: commutator of derivations is the graded commutator on elements") {
  auto w = weil_like(3);
  testing::Gen gen(44);
  for (int t = 0; t < 30; ++t) {
    int p = gen.integer(-1, 1), q = gen.integer(-1, 1);
    Derivation d1 = testing::random_derivation(gen, w, p);
    Derivation d2 = testing::random_derivation(gen, w, q);
    Derivation c = commutator(d1, d2);
    Element a = testing::random_element(gen, w, gen.integer(0, 4));
    Rational sign = (p * q) % 2 == 0 ? 1 : -1;
    CHECK(c(a) == d1(d2(a)) - sign * d2(d1(a)));
  }
}

TEST_CASE("algebra maps are multiplicative") {
  auto w = weil_like(3);
  testing::Gen gen(55);
  std::vector<Element> images;
  for (const auto& g : w->generators()) images.push_back(testing::random_element(gen, w, g.degree, 2));
  AlgebraMap f(w, w, images);
  for (int t = 0; t < 30; ++t) {
    Element a = testing::random_element(gen, w, gen.integer(0, 4));
    Element b = testing::random_element(gen, w, gen.integer(0, 4));
    CHECK(f(a * b) == f(a) * f(b));
  }
  CHECK(AlgebraMap::identity(w).after(f) == f);
}

TEST_CASE("printing") {
  auto w = weil_like(3);
  Element e = Rational(1, 2) * Element::generator(w, "theta1") * Element::generator(w, "theta2") -
              Element::generator(w, "u3") + Element::scalar(w, 3);
  CHECK(e.to_string() == "1/2*theta1*theta2 - u3 + 3");
  CHECK(Element(w).to_string() == "0");
}

TEST_CASE("coordinates and matrices") {
  auto w = weil_like(1);
  auto b1 = w->degree_basis(1);
  auto b2 = w->degree_basis(2);
  Derivation dk = koszul(w, 1);
  RationalMatrix m = derivation_matrix(dk, 1);
  CHECK(m == RationalMatrix{{1}});
  Element e = Rational(3) * Element::generator(w, "u");
  CHECK(from_coordinates(w, b2, coordinates(e, b2)) == e);
  CHECK_THROWS_AS(coordinates(e, b1), DimensionMismatch);
}
