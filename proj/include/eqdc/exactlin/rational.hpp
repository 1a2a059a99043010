#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace eqdc {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Canonical text: "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
/// q - floor(q), in [0, 1).
Rational fractional_part(const Rational& q);

Integer factorial(unsigned n);

/// Element of Q(i). Only used for matrix representations of Lie algebras.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRational conj() const { return {re, -im}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    GaussRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "a", "bi", "a+bi", "a-bi"; b printed as rational, unit coefficient elided.
std::string to_string(const GaussRational& z);
GaussRational parse_gauss(const std::string& text);

}  // namespace eqdc
