#include "eqdc/gca/algebra.hpp"

#include <set>

#include "eqdc/error.hpp"

namespace eqdc {

AlgebraPtr GradedAlgebra::make(std::vector<Generator> generators,
                               std::optional<unsigned> weight_cap) {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw SyntaxError("generator with empty name");
    if (g.degree < 0) throw DegreeMismatch("generator '" + g.name + "' has negative degree");
    if (!names.insert(g.name).second) throw NameCollision("generator '" + g.name + "' repeated");
    if (g.bidegree && g.bidegree->first + g.bidegree->second != g.degree) {
      throw DegreeMismatch("bidegree of '" + g.name + "' does not sum to its degree");
    }
  }
  auto alg = std::make_shared<GradedAlgebra>();
  alg->generators_ = std::move(generators);
  alg->weight_cap_ = weight_cap;
  return alg;
}

std::optional<std::size_t> GradedAlgebra::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t GradedAlgebra::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw UnknownGenerator("no generator named '" + name + "'");
  return *i;
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += int(m[i]) * generators_[i].degree;
  return d;
}

unsigned GradedAlgebra::weight(const Monomial& m) const {
  unsigned w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * generators_[i].weight;
  return w;
}

bool GradedAlgebra::is_nonzero(const Monomial& m) const {
  if (m.size() != size()) throw DimensionMismatch("monomial length does not match algebra");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 1 && is_odd(i)) return false;
  }
  return !weight_cap_ || weight(m) <= *weight_cap_;
}

Monomial GradedAlgebra::generator_monomial(std::size_t i) const {
  Monomial m = unit();
  m.at(i) = 1;
  return m;
}

int GradedAlgebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
  const std::size_t n = size();
  out.assign(n, 0);
  // sign: each odd generator of b moves left past the odd generators of a with larger index
  unsigned swaps = 0;
  unsigned odd_a_above = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (is_odd(i)) {
      if (a[i] && b[i]) return 0;
      if (b[i]) swaps += odd_a_above;
      if (a[i]) ++odd_a_above;
    }
    out[i] = a[i] + b[i];
  }
  if (weight_cap_ && weight(out) > *weight_cap_) return 0;
  return swaps % 2 == 0 ? 1 : -1;
}

std::vector<Monomial> GradedAlgebra::degree_basis(int n) const {
  std::vector<Monomial> out;
  if (n < 0) return out;
  for (const auto& g : generators_) {
    if (g.degree == 0 && (g.weight == 0 || !weight_cap_)) {
      throw InfiniteBasis("degree-0 generator '" + g.name + "' is not truncated");
    }
  }
  Monomial m = unit();
  std::function<void(std::size_t, int, unsigned)> rec = [&](std::size_t i, int left,
                                                             unsigned wleft) {
    if (i == size()) {
      if (left == 0) out.push_back(m);
      return;
    }
    const Generator& g = generators_[i];
    unsigned max_e;
    if (is_odd(i)) {
      max_e = 1;
    } else if (g.degree > 0) {
      max_e = unsigned(left / g.degree);
    } else {
      max_e = wleft / g.weight;
    }
    for (unsigned e = max_e + 1; e-- > 0;) {
      if (int(e) * g.degree > left) continue;
      if (weight_cap_ && e * g.weight > wleft) continue;
      m[i] = e;
      rec(i + 1, left - int(e) * g.degree, weight_cap_ ? wleft - e * g.weight : wleft);
    }
    m[i] = 0;
  };
  rec(0, n, weight_cap_ ? *weight_cap_ : 0);
  return out;
}

std::string GradedAlgebra::monomial_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += generators_[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

void require_same_carrier(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_structure(*b)) {
    throw CarrierMismatch("elements live in different algebras");
  }
}

Element Element::scalar(AlgebraPtr algebra, const Rational& q) {
  Element e(algebra);
  e.add_term(algebra->unit(), q);
  return e;
}

Element Element::generator(AlgebraPtr algebra, std::size_t i) {
  Element e(algebra);
  e.add_term(algebra->generator_monomial(i), 1);
  return e;
}

Element Element::generator(AlgebraPtr algebra, const std::string& name) {
  std::size_t i = algebra->index(name);
  return generator(std::move(algebra), i);
}

Element Element::monomial(AlgebraPtr algebra, const Monomial& m, const Rational& q) {
  Element e(algebra);
  e.add_term(m, q);
  return e;
}

void Element::add_term(const Monomial& m, const Rational& q) {
  if (q == 0 || !algebra_->is_nonzero(m)) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Element::degree() const {
  std::optional<int> deg;
  for (const auto& [m, q] : terms_) {
    int d = algebra_->degree(m);
    if (deg && *deg != d) throw DegreeMismatch("element '" + to_string() + "' is not homogeneous");
    deg = d;
  }
  return deg;
}

bool Element::is_homogeneous_of(int n) const {
  for (const auto& [m, q] : terms_) {
    if (algebra_->degree(m) != n) return false;
  }
  return true;
}

Element Element::part(int n) const {
  Element out(algebra_);
  for (const auto& [m, q] : terms_) {
    if (algebra_->degree(m) == n) out.terms_.emplace(m, q);
  }
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, q] : terms_) {
    Rational mag = abs(q);
    bool is_unit = true;
    for (unsigned e : m) is_unit = is_unit && e == 0;
    std::string term;
    if (is_unit) {
      term = eqdc::to_string(mag);
    } else if (mag == 1) {
      term = algebra_->monomial_string(m);
    } else {
      term = eqdc::to_string(mag) + "*" + algebra_->monomial_string(m);
    }
    if (out.empty()) {
      out = q < 0 ? "-" + term : term;
    } else {
      out += q < 0 ? " - " + term : " + " + term;
    }
  }
  return out;
}

Element& Element::operator+=(const Element& b) {
  if (!algebra_) algebra_ = b.algebra_;
  require_same_carrier(algebra_, b.algebra_);
  for (const auto& [m, q] : b.terms_) add_term(m, q);
  return *this;
}

Element& Element::operator-=(const Element& b) {
  if (!algebra_) algebra_ = b.algebra_;
  require_same_carrier(algebra_, b.algebra_);
  for (const auto& [m, q] : b.terms_) add_term(m, -q);
  return *this;
}

Element operator+(const Element& a, const Element& b) {
  Element out = a;
  out += b;
  return out;
}

Element operator-(const Element& a, const Element& b) {
  Element out = a;
  out -= b;
  return out;
}

Element operator-(const Element& a) {
  Element out(a.algebra_);
  for (const auto& [m, q] : a.terms_) out.terms_.emplace(m, -q);
  return out;
}

Element operator*(const Element& a, const Element& b) {
  require_same_carrier(a.algebra_, b.algebra_);
  Element out(a.algebra_);
  Monomial prod;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      int sign = a.algebra_->multiply(ma, mb, prod);
      if (sign == 0) continue;
      Rational c = qa * qb;
      if (sign < 0) c = -c;
      out.add_term(prod, c);
    }
  }
  return out;
}

Element operator*(const Rational& q, const Element& a) {
  Element out(a.algebra_);
  if (q == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, q * c);
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  require_same_carrier(a.algebra_, b.algebra_);
  return a.terms_ == b.terms_;
}

Element power(const Element& x, unsigned e) {
  Element out = Element::scalar(x.algebra(), 1);
  for (unsigned k = 0; k < e; ++k) out = out * x;
  return out;
}

RationalVector coordinates(const Element& e, const std::vector<Monomial>& basis) {
  RationalVector v(basis.size());
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  for (const auto& [m, q] : e.terms()) {
    auto it = pos.find(m);
    if (it == pos.end()) {
      throw DimensionMismatch("term " + e.algebra()->monomial_string(m) + " outside basis");
    }
    v[it->second] = q;
  }
  return v;
}

Element from_coordinates(const AlgebraPtr& algebra, const std::vector<Monomial>& basis,
                         const RationalVector& v) {
  if (v.size() != basis.size()) throw DimensionMismatch("coordinate vector length");
  Element e(algebra);
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
  return e;
}

RationalMatrix matrix_of(const std::function<Element(const Element&)>& f, const AlgebraPtr& algebra,
                         const std::vector<Monomial>& source, const std::vector<Monomial>& target) {
  RationalMatrix m(target.size(), source.size());
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < target.size(); ++i) pos.emplace(target[i], i);
  for (std::size_t j = 0; j < source.size(); ++j) {
    Element image = f(Element::monomial(algebra, source[j]));
    for (const auto& [mono, q] : image.terms()) {
      auto it = pos.find(mono);
      if (it == pos.end()) {
        throw DimensionMismatch("image term " + image.algebra()->monomial_string(mono) +
                                " outside target basis");
      }
      m.set(it->second, j, q);
    }
  }
  return m;
}

}  // namespace eqdc
