#include "eqdc/exactlin/rational.hpp"

#include <stdexcept>

namespace eqdc {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/') {
      if (seen_slash || !digit_before) throw std::invalid_argument("bad rational '" + text + "'");
      seen_slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q(body, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor_of(q)); }

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::string to_string(const GaussRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im;
  if (z.im == 1) {
    im = "i";
  } else if (z.im == -1) {
    im = "-i";
  } else {
    im = to_string(z.im) + "i";
  }
  if (z.re == 0) return im;
  if (im[0] == '-') return to_string(z.re) + im;
  return to_string(z.re) + "+" + im;
}

GaussRational parse_gauss(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.back() != 'i') return GaussRational(parse_rational(text));
  std::string body = text.substr(0, text.size() - 1);
  // split "a+b" / "a-b" at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part;
  std::string im_part = body;
  if (split != std::string::npos) {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, im};
}

}  // namespace eqdc
