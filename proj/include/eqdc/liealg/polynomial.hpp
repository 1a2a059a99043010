#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqdc/error.hpp"
#include "eqdc/exactlin/rational.hpp"

namespace eqdc {

using Exponents = std::vector<unsigned>;

inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const GaussRational& z) { return z.is_zero(); }

/// Commutative polynomial in a fixed number of variables with coefficients in
/// Q or Q(i). Zero coefficients are never stored.
template <class Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Scalar& s) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), s);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i, const Scalar& s = Scalar(Rational(1))) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, s);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& s) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector length");
    if (scalar_is_zero(s)) return;
    auto [it, inserted] = terms_.emplace(e, s);
    if (inserted) return;
    it->second += s;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  /// Total degree if homogeneous; -1 for zero; throws if mixed.
  int degree() const {
    int deg = -1;
    for (const auto& [e, s] : terms_) {
      int d = 0;
      for (unsigned x : e) d += int(x);
      if (deg >= 0 && d != deg) throw DegreeMismatch("polynomial is not homogeneous");
      deg = d;
    }
    return deg;
  }

  Poly derivative(std::size_t i) const {
    Poly out(nvars_);
    for (const auto& [e, s] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      out.add_term(f, s * Scalar(Rational(e[i])));
    }
    return out;
  }

  Scalar evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point length");
    Scalar total;
    for (const auto& [e, s] : terms_) {
      Scalar t = s;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
      }
      total = total + t;
    }
    return total;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, s] : b.terms_) out.add_term(e, s);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, s] : b.terms_) out.add_term(e, -s);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial variable count");
    Poly out(a.nvars_);
    for (const auto& [ea, sa] : a.terms_) {
      for (const auto& [eb, sb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, sa * sb);
      }
    }
    return out;
  }
  friend Poly operator*(const Scalar& s, const Poly& p) {
    Poly out(p.nvars_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

using RationalPoly = Poly<Rational>;
using GaussPoly = Poly<GaussRational>;

/// "3*x^2*y - 1/2*z"; variables named by `names`.
std::string to_string(const RationalPoly& p, const std::vector<std::string>& names);

}  // namespace eqdc
