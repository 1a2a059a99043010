#include "eqdc/diffcoh/cochain.hpp"

#include "eqdc/error.hpp"
#include "eqdc/exactlin/smith.hpp"

namespace eqdc {

namespace {

bool all_zero(const IntegerVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntegerVector integral(const RationalVector& v, const char* what) {
  IntegerVector out;
  for (const auto& x : v) {
    if (!is_integer(x)) throw NotIntegral(std::string(what) + " is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

std::string combination(const RationalVector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational a = abs(v[i]);
    std::string term;
    if (labels[i] == "1") {
      term = to_string(a);
    } else {
      term = a == 1 ? labels[i] : to_string(a) + "*" + labels[i];
    }
    if (out.empty()) {
      out = v[i] < 0 ? "-" + term : term;
    } else {
      out += v[i] < 0 ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> labels_at(const std::vector<std::vector<std::string>>& table, int n) {
  if (n < 0 || std::size_t(n) >= table.size()) return {};
  return table[std::size_t(n)];
}

}  // namespace

void require_grading(const GeometricModel& m, const DiffCochain& x) {
  const std::string at = " for a degree-" + std::to_string(x.degree) + " triple";
  if (x.c.size() != m.rank(x.degree)) throw GradingMismatch("c has the wrong length" + at);
  if (x.h.size() != m.rank(x.degree - 1)) throw GradingMismatch("h has the wrong length" + at);
  if (x.omega.size() != m.forms(x.degree)) throw GradingMismatch("omega has the wrong length" + at);
  if (x.degree < x.q && !is_zero(x.omega)) throw GradingMismatch("omega must vanish below degree q" + at);
}

DiffCochain zero_cochain(const GeometricModel& m, int degree, int q) {
  return {degree, q, IntegerVector(m.rank(degree), Integer(0)), RationalVector(m.rank(degree - 1), Rational(0)),
          RationalVector(m.forms(degree), Rational(0))};
}

DiffCochain unit_cochain(const GeometricModel& m) {
  DiffCochain u = zero_cochain(m, 0, 0);
  u.c.at(0) = 1;
  u.omega.at(0) = 1;
  return u;
}

DiffCochain operator+(const DiffCochain& a, const DiffCochain& b) {
  if (a.degree != b.degree || a.q != b.q) throw GradingMismatch("adding triples of different degrees");
  DiffCochain out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  out.h = add(a.h, b.h);
  out.omega = add(a.omega, b.omega);
  return out;
}

DiffCochain operator*(const Integer& n, const DiffCochain& a) {
  DiffCochain out = a;
  for (auto& x : out.c) x *= n;
  out.h = scaled(a.h, Rational(n));
  out.omega = scaled(a.omega, Rational(n));
  return out;
}

DiffCochain operator-(const DiffCochain& a, const DiffCochain& b) { return a + Integer(-1) * b; }

DiffCochain differential(const DiffCochain& x, const GeometricModel& m) {
  require_grading(m, x);
  const int k = x.degree;
  DiffCochain out = zero_cochain(m, k + 1, x.q);
  out.c = m.delta_at(k).apply(x.c);
  RationalVector h = subtract(m.j_at(k).apply(x.omega), to_rational(x.c));
  out.h = subtract(h, m.delta_at(k - 1).to_rational().apply(x.h));
  if (k + 1 >= x.q) out.omega = m.d_forms_at(k).apply(x.omega);
  return out;
}

bool is_cocycle(const DiffCochain& x, const GeometricModel& m) {
  DiffCochain d = differential(x, m);
  return all_zero(d.c) && is_zero(d.h) && is_zero(d.omega);
}

DiffCochain normalize(const DiffCochain& x, const GeometricModel& m) {
  require_grading(m, x);
  const int n = x.degree;
  DiffCochain out = x;
  if (x.h.empty()) return out;
  SmithForm s = smith_normal_form(m.delta_at(n - 2));
  const std::size_t rho = s.rank();
  RationalVector y = s.U.to_rational().apply(x.h);
  RationalVector y_norm(y.size(), Rational(0));
  IntegerVector floor_part(y.size(), Integer(0));
  for (std::size_t i = rho; i < y.size(); ++i) {
    floor_part[i] = floor_of(y[i]);
    y_norm[i] = fractional_part(y[i]);
  }
  IntegerMatrix u_inv = unimodular_inverse(s.U);
  out.h = u_inv.to_rational().apply(y_norm);
  IntegerVector c_shift = m.delta_at(n - 1).apply(u_inv.apply(floor_part));
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += c_shift[i];
  return out;
}

bool is_coboundary(const DiffCochain& x, const GeometricModel& m) {
  require_grading(m, x);
  if (x.q != x.degree) throw GradingMismatch("coboundary test needs q = degree");
  if (!is_cocycle(x, m)) throw NotACocycle("triple " + to_string(x, m) + " is not a cocycle");
  if (!is_zero(x.omega)) return false;
  return is_zero(normalize(x, m).h);
}

DiffCochain product(const DiffCochain& a, const DiffCochain& b, const GeometricModel& m) {
  require_grading(m, a);
  require_grading(m, b);
  const int p = a.degree;
  const int q = b.degree;
  if (!is_zero(a.omega) && !is_zero(b.omega) && !m.j_multiplicative) {
    throw NeedsHomotopyData("both curvatures are nonzero and " + m.name + " records no homotopy B");
  }
  DiffCochain out = zero_cochain(m, p + q, a.q + b.q);
  out.c = integral(m.cup_product(p, to_rational(a.c), q, to_rational(b.c)), "c1 c2");
  RationalVector first = m.cup_product(p, to_rational(a.c), q - 1, b.h);
  if (p % 2 != 0) first = scaled(first, Rational(-1));
  out.h = add(first, m.cup_product(p - 1, a.h, q, m.j_at(q).apply(b.omega)));
  out.omega = m.wedge_product(p, a.omega, q, b.omega);
  if (out.degree < out.q) out.omega.assign(out.omega.size(), Rational(0));
  return out;
}

std::string to_string(const DiffCochain& x, const GeometricModel& m) {
  return "(" + combination(to_rational(x.c), labels_at(m.cochain_labels, x.degree)) + ", " +
         combination(x.h, labels_at(m.cochain_labels, x.degree - 1)) + ", " +
         combination(x.omega, labels_at(m.form_labels, x.degree)) + ")";
}

}  // namespace eqdc
