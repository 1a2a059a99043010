#pragma once

#include <vector>

#include "eqdc/gca/algebra.hpp"

namespace eqdc {

/// Graded derivation of fixed degree, determined by its values on generators:
/// D(xy) = D(x) y + (-1)^{|D||x|} x D(y).
class Derivation {
 public:
  Derivation() = default;
  /// Throws DegreeMismatch if an image is not homogeneous of degree |x_i| + degree.
  Derivation(AlgebraPtr algebra, int degree, std::vector<Element> images);
  static Derivation zero(AlgebraPtr algebra, int degree);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const Element& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Element>& images() const { return images_; }
  bool is_zero() const;

  Element apply(const Element& a) const;
  Element apply_monomial(const Monomial& m) const;
  Element operator()(const Element& a) const { return apply(a); }

  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  friend Derivation operator*(const Rational& q, const Derivation& a);
  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  AlgebraPtr algebra_;
  int degree_ = 0;
  std::vector<Element> images_;
};

/// D1 D2 - (-1)^{|D1||D2|} D2 D1, as a derivation.
Derivation commutator(const Derivation& d1, const Derivation& d2);

/// Matrix of D from the degree-n monomial basis to the degree-(n + |D|) basis.
RationalMatrix derivation_matrix(const Derivation& d, int n);

/// Degree-0 multiplicative map determined by generator images.
class AlgebraMap {
 public:
  AlgebraMap() = default;
  /// Throws DegreeMismatch if images do not preserve degree.
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);
  static AlgebraMap identity(const AlgebraPtr& algebra);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Element& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& a) const;
  Element operator()(const Element& a) const { return apply(a); }

  /// (this after other): x -> this(other(x)).
  AlgebraMap after(const AlgebraMap& other) const;
  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b);

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> images_;
};

/// A (x) B with generators of A first. Prefixes are prepended to names; a
/// resulting name clash throws NameCollision.
struct TensorProduct {
  AlgebraPtr algebra;
  AlgebraMap left;
  AlgebraMap right;
  std::size_t offset = 0;  // index of B's first generator

  Derivation extend_left(const Derivation& d) const;
  Derivation extend_right(const Derivation& d) const;
};

TensorProduct tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& prefix_a = "",
                     const std::string& prefix_b = "");

}  // namespace eqdc
