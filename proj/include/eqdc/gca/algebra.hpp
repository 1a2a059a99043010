#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdc/exactlin/matrix.hpp"
#include "eqdc/exactlin/rational.hpp"

namespace eqdc {

struct Generator {
  std::string name;
  int degree = 0;
  std::optional<std::pair<int, int>> bidegree;
  /// Truncation weight; monomials whose total weight exceeds the algebra's
  /// weight cap are zero. Used for polynomial coefficient functions.
  unsigned weight = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector in generator-index order. Odd generators have exponent <= 1.
using Monomial = std::vector<unsigned>;

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Free graded-commutative algebra over Q on finitely many generators,
/// optionally truncated by total weight.
class GradedAlgebra {
 public:
  static AlgebraPtr make(std::vector<Generator> generators,
                         std::optional<unsigned> weight_cap = std::nullopt);

  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<unsigned> weight_cap() const { return weight_cap_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws UnknownGenerator.
  std::size_t index(const std::string& name) const;
  bool is_odd(std::size_t i) const { return generators_[i].degree % 2 != 0; }

  int degree(const Monomial& m) const;
  unsigned weight(const Monomial& m) const;
  /// False if the monomial is zero in the algebra (odd square or over the weight cap).
  bool is_nonzero(const Monomial& m) const;
  Monomial unit() const { return Monomial(size(), 0); }
  Monomial generator_monomial(std::size_t i) const;

  /// a * b in normal form with its Koszul sign (+1/-1), or 0 when the product vanishes.
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;

  /// All nonzero monomials of total degree n in canonical order.
  /// Throws InfiniteBasis if a degree-0 generator is not bounded by the weight cap.
  std::vector<Monomial> degree_basis(int n) const;

  std::string monomial_string(const Monomial& m) const;

  bool same_structure(const GradedAlgebra& other) const {
    return generators_ == other.generators_ && weight_cap_ == other.weight_cap_;
  }

 private:
  std::vector<Generator> generators_;
  std::optional<unsigned> weight_cap_;
};

/// Canonical monomial order used for storage and printing.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Element {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Element() = default;
  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static Element scalar(AlgebraPtr algebra, const Rational& q);
  static Element generator(AlgebraPtr algebra, std::size_t i);
  static Element generator(AlgebraPtr algebra, const std::string& name);
  static Element monomial(AlgebraPtr algebra, const Monomial& m, const Rational& q = 1);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& q);
  Rational coefficient(const Monomial& m) const;

  /// Degree of a nonzero homogeneous element. nullopt for zero; throws
  /// DegreeMismatch when mixed.
  std::optional<int> degree() const;
  bool is_homogeneous_of(int n) const;
  /// The component of degree n.
  Element part(int n) const;

  std::string to_string() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Rational& q, const Element& a);
  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr algebra_;
  Terms terms_;
};

/// Throws CarrierMismatch unless a and b are the same algebra (by identity or structure).
void require_same_carrier(const AlgebraPtr& a, const AlgebraPtr& b);

Element power(const Element& x, unsigned e);

/// Coordinates of e in the given monomial basis; throws DimensionMismatch if e
/// has a term outside the basis.
RationalVector coordinates(const Element& e, const std::vector<Monomial>& basis);
Element from_coordinates(const AlgebraPtr& algebra, const std::vector<Monomial>& basis,
                         const RationalVector& v);

/// Matrix of a linear map between spans of monomial bases (column j = image of basis[j]).
RationalMatrix matrix_of(const std::function<Element(const Element&)>& f, const AlgebraPtr& algebra,
                         const std::vector<Monomial>& source, const std::vector<Monomial>& target);

}  // namespace eqdc
