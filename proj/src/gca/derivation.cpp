#include "eqdc/gca/derivation.hpp"

#include "eqdc/error.hpp"

namespace eqdc {

namespace {

void check_images(const AlgebraPtr& algebra, int shift, const std::vector<Element>& images,
                  const char* what) {
  if (images.size() != algebra->size()) {
    throw DimensionMismatch(std::string(what) + " needs one image per generator");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Generator& g = algebra->generator(i);
    if (!images[i].is_homogeneous_of(g.degree + shift)) {
      throw DegreeMismatch(std::string(what) + " image of '" + g.name + "' is '" +
                           images[i].to_string() + "', expected degree " +
                           std::to_string(g.degree + shift));
    }
  }
}

}  // namespace

Derivation::Derivation(AlgebraPtr algebra, int degree, std::vector<Element> images)
    : algebra_(std::move(algebra)), degree_(degree), images_(std::move(images)) {
  for (auto& im : images_) {
    if (!im.algebra()) im = Element(algebra_);
    require_same_carrier(algebra_, im.algebra());
  }
  check_images(algebra_, degree_, images_, "derivation");
}

Derivation Derivation::zero(AlgebraPtr algebra, int degree) {
  std::vector<Element> images(algebra->size(), Element(algebra));
  return Derivation(algebra, degree, std::move(images));
}

bool Derivation::is_zero() const {
  for (const auto& im : images_) {
    if (!im.is_zero()) return false;
  }
  return true;
}

Element Derivation::apply_monomial(const Monomial& m) const {
  const GradedAlgebra& alg = *algebra_;
  Element out(algebra_);
  Monomial prefix = alg.unit();
  int prefix_degree = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const Element& di = images_[i];
    if (!di.is_zero()) {
      Monomial rest = alg.unit();
      for (std::size_t j = i + 1; j < m.size(); ++j) rest[j] = m[j];
      Monomial lower = prefix;
      lower[i] = m[i] - 1;  // x_i^{e-1}, even generators only reach e > 1
      Rational coeff = Rational(m[i]);
      if ((degree_ * prefix_degree) % 2 != 0) coeff = -coeff;
      Element left = Element::monomial(algebra_, lower, coeff);
      out += left * di * Element::monomial(algebra_, rest);
    }
    prefix[i] = m[i];
    prefix_degree += int(m[i]) * alg.generator(i).degree;
  }
  return out;
}

Element Derivation::apply(const Element& a) const {
  require_same_carrier(algebra_, a.algebra());
  Element out(algebra_);
  for (const auto& [m, q] : a.terms()) out += q * apply_monomial(m);
  return out;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_carrier(a.algebra_, b.algebra_);
  if (a.degree_ != b.degree_) throw DegreeMismatch("sum of derivations of different degree");
  std::vector<Element> images;
  for (std::size_t i = 0; i < a.images_.size(); ++i) images.push_back(a.images_[i] + b.images_[i]);
  return Derivation(a.algebra_, a.degree_, std::move(images));
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  return a + Rational(-1) * b;
}

Derivation operator*(const Rational& q, const Derivation& a) {
  std::vector<Element> images;
  for (const auto& im : a.images_) images.push_back(q * im);
  return Derivation(a.algebra_, a.degree_, std::move(images));
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.degree_ != b.degree_) return a.is_zero() && b.is_zero();
  require_same_carrier(a.algebra_, b.algebra_);
  return a.images_ == b.images_;
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  require_same_carrier(d1.algebra(), d2.algebra());
  const bool both_odd = (d1.degree() % 2 != 0) && (d2.degree() % 2 != 0);
  std::vector<Element> images;
  for (std::size_t i = 0; i < d1.algebra()->size(); ++i) {
    Element a = d1(d2.image(i));
    Element b = d2(d1.image(i));
    images.push_back(both_odd ? a + b : a - b);
  }
  return Derivation(d1.algebra(), d1.degree() + d2.degree(), std::move(images));
}

RationalMatrix derivation_matrix(const Derivation& d, int n) {
  const auto& alg = d.algebra();
  return matrix_of([&](const Element& e) { return d(e); }, alg, alg->degree_basis(n),
                   alg->degree_basis(n + d.degree()));
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) {
    throw DimensionMismatch("algebra map needs one image per generator");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i].algebra()) images_[i] = Element(target_);
    require_same_carrier(target_, images_[i].algebra());
    const Generator& g = source_->generator(i);
    if (!images_[i].is_homogeneous_of(g.degree)) {
      throw DegreeMismatch("algebra map image of '" + g.name + "' is '" +
                           images_[i].to_string() + "', expected degree " +
                           std::to_string(g.degree));
    }
  }
}

AlgebraMap AlgebraMap::identity(const AlgebraPtr& algebra) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < algebra->size(); ++i) images.push_back(Element::generator(algebra, i));
  return AlgebraMap(algebra, algebra, std::move(images));
}

Element AlgebraMap::apply(const Element& a) const {
  require_same_carrier(source_, a.algebra());
  Element out(target_);
  for (const auto& [m, q] : a.terms()) {
    Element term = Element::scalar(target_, q);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) term = term * images_[i];
    }
    out += term;
  }
  return out;
}

AlgebraMap AlgebraMap::after(const AlgebraMap& other) const {
  require_same_carrier(other.target_, source_);
  std::vector<Element> images;
  for (const auto& im : other.images_) images.push_back(apply(im));
  return AlgebraMap(other.source_, target_, std::move(images));
}

bool operator==(const AlgebraMap& a, const AlgebraMap& b) {
  require_same_carrier(a.source_, b.source_);
  require_same_carrier(a.target_, b.target_);
  return a.images_ == b.images_;
}

TensorProduct tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& prefix_a,
                     const std::string& prefix_b) {
  std::vector<Generator> gens;
  for (auto g : a->generators()) {
    g.name = prefix_a + g.name;
    gens.push_back(g);
  }
  for (auto g : b->generators()) {
    g.name = prefix_b + g.name;
    gens.push_back(g);
  }
  if (a->weight_cap() && b->weight_cap()) {
    throw DimensionMismatch("both tensor factors carry a weight truncation");
  }
  auto cap = a->weight_cap() ? a->weight_cap() : b->weight_cap();
  TensorProduct t;
  t.algebra = GradedAlgebra::make(std::move(gens), cap);
  t.offset = a->size();
  std::vector<Element> left, right;
  for (std::size_t i = 0; i < a->size(); ++i) left.push_back(Element::generator(t.algebra, i));
  for (std::size_t i = 0; i < b->size(); ++i) {
    right.push_back(Element::generator(t.algebra, t.offset + i));
  }
  t.left = AlgebraMap(a, t.algebra, std::move(left));
  t.right = AlgebraMap(b, t.algebra, std::move(right));
  return t;
}

Derivation TensorProduct::extend_left(const Derivation& d) const {
  require_same_carrier(d.algebra(), left.source());
  std::vector<Element> images(algebra->size(), Element(algebra));
  for (std::size_t i = 0; i < left.source()->size(); ++i) images[i] = left(d.image(i));
  return Derivation(algebra, d.degree(), std::move(images));
}

Derivation TensorProduct::extend_right(const Derivation& d) const {
  require_same_carrier(d.algebra(), right.source());
  std::vector<Element> images(algebra->size(), Element(algebra));
  for (std::size_t i = 0; i < right.source()->size(); ++i) {
    images[offset + i] = right(d.image(i));
  }
  return Derivation(algebra, d.degree(), std::move(images));
}

}  // namespace eqdc
