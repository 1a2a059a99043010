#include "eqdc/liealg/polynomial.hpp"

namespace eqdc {

std::string to_string(const RationalPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  // highest exponent vectors first, so x comes before y
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names.at(i);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string term;
    if (vars.empty()) {
      term = to_string(mag);
    } else if (mag == 1) {
      term = vars;
    } else {
      term = to_string(mag) + "*" + vars;
    }
    if (out.empty()) {
      out = c < 0 ? "-" + term : term;
    } else {
      out += c < 0 ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace eqdc
