#include "eqdc/diffcoh/cohomology.hpp"

#include <numeric>

#include "eqdc/error.hpp"
#include "eqdc/exactlin/smith.hpp"

namespace eqdc {

namespace {

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

IntegerVector integral(const RationalVector& v) {
  IntegerVector out;
  for (const auto& x : v) {
    if (!is_integer(x)) throw NotIntegral("expected an integral cochain");
    out.push_back(x.get_num());
  }
  return out;
}

Integer mod_nonneg(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

// Least common multiple of the denominators of a rational matrix.
Integer common_denominator(const RationalMatrix& m) {
  Integer l = 1;
  for (const auto& [idx, q] : m.entries()) {
    Integer den = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

IntegerMatrix scaled_integer(const RationalMatrix& m, const Integer& s) {
  IntegerMatrix out(m.rows(), m.cols());
  for (const auto& [idx, q] : m.entries()) {
    Rational v = q * Rational(s);
    out(idx.first, idx.second) = v.get_num();
  }
  return out;
}

RationalMatrix columns_matrix(const std::vector<RationalVector>& cols, std::size_t rows) {
  return RationalMatrix::from_columns(cols, rows);
}

bool in_rational_image(const RationalMatrix& a, const RationalVector& v) {
  return solve(a, v).has_value();
}

void require_cocycle(const DiffCochain& x, const GeometricModel& m) {
  if (!is_cocycle(x, m)) throw NotACocycle("triple " + to_string(x, m) + " is not a cocycle");
}

}  // namespace

bool IntegralClass::is_zero() const {
  for (const auto& x : free) {
    if (x != 0) return false;
  }
  for (const auto& x : torsion) {
    if (x != 0) return false;
  }
  return true;
}

IntegralCohomology integral_cohomology(const GeometricModel& m, int n) {
  IntegralCohomology out;
  out.degree = n;
  const std::size_t r = m.rank(n);
  SmithForm s = smith_normal_form(m.delta_at(n - 1));
  const std::size_t rho = s.rank();
  const auto d = s.divisors();
  IntegerMatrix u_inv = unimodular_inverse(s.U);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < rho; ++i) {
    if (d[i] > 1) {
      orders.push_back(d[i]);
      out.torsion_generators.push_back(u_inv.column(i));
    }
  }
  // cocycles among the complement f_rho, ..., f_{r-1}
  IntegerMatrix f(r, r - rho);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = rho; k < r; ++k) f(i, k - rho) = u_inv(i, k);
  }
  IntegerMatrix mk = m.delta_at(n) * f;
  SmithForm s2 = smith_normal_form(mk);
  for (std::size_t k = s2.rank(); k < r - rho; ++k) out.free_generators.push_back(f.apply(s2.V.column(k)));
  out.group = make_group(out.free_generators.size(), orders);
  return out;
}

IntegralClass classify(const GeometricModel& m, int n, const IntegerVector& c) {
  if (c.size() != m.rank(n)) throw GradingMismatch("cochain has the wrong length");
  for (const auto& x : m.delta_at(n).apply(c)) {
    if (x != 0) throw NotACocycle("delta c != 0");
  }
  const std::size_t r = m.rank(n);
  SmithForm s = smith_normal_form(m.delta_at(n - 1));
  const std::size_t rho = s.rank();
  const auto d = s.divisors();
  IntegerVector y = s.U.apply(c);
  IntegralClass out;
  for (std::size_t i = 0; i < rho; ++i) {
    if (d[i] > 1) out.torsion.push_back(mod_nonneg(y[i], d[i]));
  }
  IntegerMatrix u_inv = unimodular_inverse(s.U);
  IntegerMatrix f(r, r - rho);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = rho; k < r; ++k) f(i, k - rho) = u_inv(i, k);
  }
  SmithForm s2 = smith_normal_form(m.delta_at(n) * f);
  IntegerVector w(y.begin() + long(rho), y.end());
  IntegerVector z = unimodular_inverse(s2.V).apply(w);
  for (std::size_t k = s2.rank(); k < z.size(); ++k) out.free.push_back(z[k]);
  return out;
}

std::string DiffCohomologyReport::summary() const {
  std::string out = "rank " + std::to_string(rank()) + ", torsion [";
  for (std::size_t i = 0; i < flat_torsion.size(); ++i) {
    if (i) out += ", ";
    out += to_string(flat_torsion[i]);
  }
  out += "]";
  if (flat_divisible_rank) out += ", Q/Z^" + std::to_string(flat_divisible_rank);
  if (lattice_rational_rank) out += ", Q^" + std::to_string(lattice_rational_rank);
  return out;
}

DiffCohomologyReport diff_cohomology(const GeometricModel& m, int n) {
  m.require_certified(n);
  DiffCohomologyReport rep;
  rep.degree = n;
  rep.certified_max = m.certified_max();

  const IntegerMatrix a = m.delta_at(n - 1);  // C^{n-1} -> C^n
  const IntegerMatrix b = m.delta_at(n - 2);  // C^{n-2} -> C^{n-1}
  const RationalMatrix a_q = a.to_rational();
  SmithForm sa = smith_normal_form(a);
  const std::size_t rho = sa.rank();
  const auto da = sa.divisors();
  const std::size_t r_prev = m.rank(n - 1);

  // torsion of the flat part
  for (std::size_t i = 0; i < rho; ++i) {
    if (da[i] <= 1) continue;
    DiffCochain x = zero_cochain(m, n, n);
    x.h = scaled(to_rational(sa.V.column(i)), Rational(1) / Rational(da[i]));
    x.c = integral(scaled(a_q.apply(x.h), Rational(-1)));
    rep.flat_torsion.push_back(da[i]);
    rep.flat_torsion_generators.push_back(x);
  }

  // divisible directions: ker A modulo im B, scaled to period one
  {
    SmithForm sb = smith_normal_form(b);
    const std::size_t rho_b = sb.rank();
    std::vector<RationalVector> span;
    for (std::size_t k = 0; k < b.cols(); ++k) span.push_back(to_rational(b.column(k)));
    std::size_t span_rank = r_prev ? rank(columns_matrix(span, r_prev)) : 0;
    for (std::size_t i = rho; i < r_prev; ++i) {
      RationalVector v = to_rational(sa.V.column(i));
      span.push_back(v);
      std::size_t nr = rank(columns_matrix(span, r_prev));
      if (nr == span_rank) {
        span.pop_back();
        continue;
      }
      span_rank = nr;
      IntegerVector y = sb.U.apply(sa.V.column(i));
      Integer g = 0;
      for (std::size_t k = rho_b; k < y.size(); ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y[k].get_mpz_t());
      rep.flat_directions.push_back(scaled(v, Rational(1) / Rational(g)));
    }
    rep.flat_divisible_rank = rep.flat_directions.size();
  }

  // curvature lattice
  std::vector<RationalVector> closed = kernel_basis(m.d_forms_at(n));
  if (m.forms(n) && !closed.empty()) {
    RationalMatrix k = columns_matrix(closed, m.forms(n));
    RationalMatrix w = sa.U.to_rational() * m.j_at(n) * k;
    const std::size_t s_rows = m.rank(n) - rho;
    RationalMatrix proj(s_rows, closed.size());
    for (const auto& [idx, q] : w.entries()) {
      if (idx.first >= rho) proj.set(idx.first - rho, idx.second, q);
    }
    Integer den = common_denominator(proj);
    SmithForm sm = smith_normal_form(scaled_integer(proj, den));
    const auto dm = sm.divisors();
    for (std::size_t i = 0; i < sm.rank(); ++i) {
      RationalVector y = scaled(to_rational(sm.V.column(i)), Rational(den) / Rational(dm[i]));
      rep.lattice_basis.push_back(k.apply(y));
    }
    rep.lattice_rational_rank = closed.size() - sm.rank();
  }
  for (const auto& omega : rep.lattice_basis) {
    RationalVector jw = m.j_at(n).apply(omega);
    RationalVector uw = sa.U.to_rational().apply(jw);
    RationalVector z(r_prev, Rational(0));
    for (std::size_t i = 0; i < rho; ++i) z[i] = uw[i] / Rational(da[i]);
    DiffCochain x = zero_cochain(m, n, n);
    x.h = sa.V.to_rational().apply(z);
    x.c = integral(subtract(jw, a_q.apply(x.h)));
    x.omega = omega;
    rep.lattice_generators.push_back(x);
  }
  return rep;
}

IntegralClass cc(const DiffCochain& x, const GeometricModel& m) {
  require_cocycle(x, m);
  return classify(m, x.degree, x.c);
}

RationalVector curv(const DiffCochain& x, const GeometricModel& m) {
  require_cocycle(x, m);
  return x.omega;
}

DiffCochain from_form(const RationalVector& eta, int n, const GeometricModel& m) {
  if (eta.size() != m.forms(n - 1)) throw GradingMismatch("eta must lie in Omega^{n-1}");
  DiffCochain x = zero_cochain(m, n, n);
  x.h = m.j_at(n - 1).apply(eta);
  x.omega = m.d_forms_at(n - 1).apply(eta);
  return x;
}

bool SesReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

SesReport verify_ses(const GeometricModel& m, int n) {
  SesReport out;
  out.degree = n;
  DiffCohomologyReport rep = diff_cohomology(m, n);
  IntegralCohomology ic = integral_cohomology(m, n);
  const RationalMatrix a_q = m.delta_at(n - 1).to_rational();

  auto check = [&](const std::string& name) -> SesCheck& {
    out.checks.push_back({name, true, ""});
    return out.checks.back();
  };
  auto fail = [](SesCheck& c, const std::string& why) {
    if (c.passed) {
      c.passed = false;
      c.detail = why;
    }
  };

  std::vector<DiffCochain> gens = rep.lattice_generators;
  gens.insert(gens.end(), rep.flat_torsion_generators.begin(), rep.flat_torsion_generators.end());
  for (const auto& v : rep.flat_directions) {
    DiffCochain x = zero_cochain(m, n, n);
    x.h = v;
    gens.push_back(x);
  }

  {
    SesCheck& c = check("generators are cocycles");
    for (const auto& x : gens) {
      if (!is_cocycle(x, m)) fail(c, to_string(x, m));
    }
    if (!c.passed) return out;
  }
  {
    SesCheck& c = check("SES1: curv maps onto the curvature lattice");
    for (std::size_t i = 0; i < rep.lattice_basis.size(); ++i) {
      if (curv(rep.lattice_generators[i], m) != rep.lattice_basis[i]) {
        fail(c, "generator " + to_string(rep.lattice_generators[i], m) + " misses its lattice vector");
      }
    }
    for (const auto& x : rep.lattice_generators) {
      // omega/2 lies off the lattice: no integral c can complete it
      RationalVector jw = m.j_at(n).apply(scaled(x.omega, Rational(1, 2)));
      SmithForm sa = smith_normal_form(m.delta_at(n - 1));
      RationalVector uw = sa.U.to_rational().apply(jw);
      bool integral_tail = true;
      for (std::size_t i = sa.rank(); i < uw.size(); ++i) integral_tail = integral_tail && is_integer(uw[i]);
      if (integral_tail) fail(c, "half of " + to_string(x, m) + " still has integral periods");
    }
  }
  {
    SesCheck& c = check("SES1: flat classes have curvature 0 and the expected order");
    for (std::size_t i = 0; i < rep.flat_torsion.size(); ++i) {
      const DiffCochain& x = rep.flat_torsion_generators[i];
      const Integer& d = rep.flat_torsion[i];
      if (!is_zero(curv(x, m))) fail(c, to_string(x, m) + " has nonzero curvature");
      if (!is_coboundary(d * x, m)) fail(c, to_string(x, m) + " times its order is not exact");
      for (Integer k = 1; k < d; ++k) {
        if (d % k == 0 && is_coboundary(k * x, m)) fail(c, to_string(x, m) + " has smaller order");
      }
    }
    const Rational samples[] = {Rational(0), Rational(1), Rational(-3), Rational(1, 2), Rational(2, 3),
                                Rational(7, 5)};
    for (const auto& v : rep.flat_directions) {
      for (const auto& r : samples) {
        DiffCochain x = zero_cochain(m, n, n);
        x.h = scaled(v, r);
        if (!is_cocycle(x, m)) fail(c, to_string(x, m) + " is not a cocycle");
        if (is_coboundary(x, m) != is_integer(r)) fail(c, to_string(x, m) + " has the wrong exactness");
      }
    }
  }
  {
    SesCheck& c = check("SES2: cc maps onto H^n(C; Z)");
    std::vector<RationalVector> closed = kernel_basis(m.d_forms_at(n));
    std::vector<IntegerVector> targets = ic.free_generators;
    targets.insert(targets.end(), ic.torsion_generators.begin(), ic.torsion_generators.end());
    for (const auto& g : targets) {
      // j(K y) - delta h = g
      std::vector<RationalVector> cols;
      for (const auto& k : closed) cols.push_back(m.j_at(n).apply(k));
      for (std::size_t i = 0; i < a_q.cols(); ++i) cols.push_back(scaled(a_q.column(i), Rational(-1)));
      auto sol = cols.empty() ? std::nullopt
                              : solve(columns_matrix(cols, m.rank(n)), to_rational(g));
      if (!sol && !cols.empty()) {
        fail(c, "no triple over the cocycle " + to_string(DiffCochain{n, n, g, {}, {}}, m));
        continue;
      }
      DiffCochain x = zero_cochain(m, n, n);
      x.c = g;
      if (sol) {
        for (std::size_t i = 0; i < closed.size(); ++i) x.omega = add(x.omega, scaled(closed[i], (*sol)[i]));
        x.h = RationalVector(sol->begin() + long(closed.size()), sol->end());
      }
      if (!is_cocycle(x, m) || !(cc(x, m) == classify(m, n, g))) fail(c, "cc misses " + to_string(x, m));
    }
  }
  {
    SesCheck& c = check("SES2: the kernel of cc comes from forms of degree n-1");
    for (std::size_t i = 0; i < m.forms(n - 1); ++i) {
      DiffCochain x = from_form(unit_vector(m.forms(n - 1), i), n, m);
      if (!is_cocycle(x, m) || !cc(x, m).is_zero()) fail(c, to_string(x, m) + " is not in the kernel");
    }
    if (n >= 1 && n - 1 <= m.certified_max()) {
      DiffCohomologyReport below = diff_cohomology(m, n - 1);
      for (const auto& eta : below.lattice_basis) {
        if (!is_coboundary(from_form(eta, n, m), m)) fail(c, "lattice form does not give an exact triple");
        RationalVector half = scaled(eta, Rational(1, 2));
        if (is_coboundary(from_form(half, n, m), m)) fail(c, "half a lattice form gives an exact triple");
      }
    }
    const RationalMatrix b_q = m.delta_at(n - 2).to_rational();
    for (const auto& x : gens) {
      if (!cc(x, m).is_zero()) continue;
      auto lift = solve_integer(m.delta_at(n - 1), x.c);
      if (!lift) {
        fail(c, "cc vanishes but c is not exact for " + to_string(x, m));
        continue;
      }
      RationalVector y = add(x.h, to_rational(*lift));
      std::vector<RationalVector> cols;
      for (std::size_t i = 0; i < m.forms(n - 1); ++i) cols.push_back(m.j_at(n - 1).apply(unit_vector(m.forms(n - 1), i)));
      for (std::size_t i = 0; i < b_q.cols(); ++i) cols.push_back(b_q.column(i));
      bool ok = is_zero(y) && is_zero(x.omega);
      if (!ok && !cols.empty()) {
        auto sol = solve(columns_matrix(cols, m.rank(n - 1)), y);
        if (sol) {
          RationalVector eta(sol->begin(), sol->begin() + long(m.forms(n - 1)));
          ok = m.d_forms_at(n - 1).apply(eta) == x.omega;
        }
      }
      if (!ok) fail(c, to_string(x, m) + " has cc = 0 but does not come from a form");
    }
  }
  {
    SesCheck& c = check("square: de Rham class of curv equals the rational class of cc");
    for (const auto& x : gens) {
      RationalVector diff = subtract(m.j_at(n).apply(x.omega), to_rational(x.c));
      if (!is_zero(diff) && !in_rational_image(a_q, diff)) fail(c, to_string(x, m));
    }
  }
  return out;
}

}  // namespace eqdc
