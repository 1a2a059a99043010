#include "eqdc/liealg/invariant.hpp"

#include <functional>

#include "eqdc/error.hpp"

namespace eqdc {

Rational InvariantPolynomial::polarized(const std::vector<std::size_t>& indices) const {
  const std::size_t n = poly.nvars();
  Exponents alpha(n, 0);
  for (auto i : indices) {
    if (i >= n) throw DimensionMismatch("polarization index out of range");
    ++alpha[i];
  }
  if (int(indices.size()) != poly.degree()) return 0;
  Integer alpha_fact = 1;
  for (unsigned e : alpha) alpha_fact *= factorial(e);
  return poly.coefficient(alpha) * Rational(alpha_fact) / Rational(factorial(indices.size()));
}

InvariantPolynomial operator*(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  InvariantPolynomial out;
  out.name = a.name == b.name ? a.name + "^2" : a.name + "*" + b.name;
  out.poly = a.poly * b.poly;
  out.normalization = a.normalization * b.normalization;
  return out;
}

std::vector<RationalPoly> infinitesimal_action(const LieAlgebra& g, const RationalPoly& p) {
  const std::size_t n = g.dim();
  std::vector<RationalPoly> out;
  std::vector<RationalPoly> partial;
  for (std::size_t b = 0; b < n; ++b) partial.push_back(p.derivative(b));
  for (std::size_t a = 0; a < n; ++a) {
    RationalPoly s(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (partial[b].is_zero()) continue;
      RationalPoly lin(n);
      for (std::size_t c = 0; c < n; ++c) {
        if (g.structure(b, a, c) != 0) lin = lin + RationalPoly::variable(n, c, g.structure(b, a, c));
      }
      s = s + lin * partial[b];
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_invariant(const LieAlgebra& g, const RationalPoly& p) {
  for (const auto& q : infinitesimal_action(g, p)) {
    if (!q.is_zero()) return false;
  }
  return true;
}

std::vector<std::string> coordinate_names(const LieAlgebra& g) {
  if (g.dim() == 1) return {"u"};
  std::vector<std::string> out;
  for (std::size_t a = 0; a < g.dim(); ++a) out.push_back("u" + std::to_string(a + 1));
  return out;
}

namespace {

// e_0 .. e_m of the eigenvalues of M = sum x^a rho_a, via Newton's identities
std::vector<GaussPoly> elementary_symmetric(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t m = g.rep_size();
  using PolyMatrix = std::vector<std::vector<GaussPoly>>;
  PolyMatrix mat(m, std::vector<GaussPoly>(m, GaussPoly(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!(*g.rep())[a][i][j].is_zero())
          mat[i][j] = mat[i][j] + GaussPoly::variable(n, a, (*g.rep())[a][i][j]);

  std::vector<GaussPoly> power_traces(m + 1, GaussPoly(n));
  PolyMatrix power = mat;
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t i = 0; i < m; ++i) power_traces[k] = power_traces[k] + power[i][i];
    if (k == m) break;
    PolyMatrix next(m, std::vector<GaussPoly>(m, GaussPoly(n)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j) next[i][j] = next[i][j] + power[i][l] * mat[l][j];
    power = std::move(next);
  }
  std::vector<GaussPoly> e(m + 1, GaussPoly(n));
  e[0] = GaussPoly::constant(n, GaussRational(Rational(1)));
  for (std::size_t k = 1; k <= m; ++k) {
    GaussPoly s(n);
    for (std::size_t i = 1; i <= k; ++i) {
      GaussPoly t = e[k - i] * power_traces[i];
      s = (i % 2 == 1) ? s + t : s - t;
    }
    e[k] = GaussRational(Rational(1, long(k))) * s;
  }
  return e;
}

}  // namespace

std::vector<GaussPoly> characteristic_coefficients(const LieAlgebra& g) {
  if (!g.rep()) throw NoRepresentation(g.name() + " has no defining representation");
  std::vector<GaussPoly> e = elementary_symmetric(g);
  for (std::size_t k = 1; k < e.size(); k += 2) e[k] = GaussRational(Rational(-1)) * e[k];
  return e;
}

std::vector<InvariantPolynomial> invariant_generators(const LieAlgebra& g, unsigned max_k) {
  const std::size_t n = g.dim();
  const auto names = coordinate_names(g);
  std::vector<InvariantPolynomial> out;
  if (g.is_abelian()) {
    for (unsigned k = 1; k <= max_k; ++k) {
      std::vector<Exponents> monos;
      Exponents e(n, 0);
      std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
          e[i] = left;
          monos.push_back(e);
          return;
        }
        for (unsigned x = left + 1; x-- > 0;) {
          e[i] = x;
          rec(i + 1, left - x);
        }
      };
      if (n > 0) rec(0, k);
      for (const auto& mono : monos) {
        InvariantPolynomial p;
        p.poly = RationalPoly(n);
        p.poly.add_term(mono, 1);
        p.name = to_string(p.poly, names);
        out.push_back(std::move(p));
      }
    }
    return out;
  }
  if (!g.rep()) {
    throw NoRepresentation(g.name() + " is not abelian and has no defining representation");
  }
  bool real = true;
  for (const auto& m : *g.rep())
    for (const auto& row : m)
      for (const auto& z : row) real = real && z.is_real();
  // sigma_k = c^k e_k with c = -i (non-real) or 1 (real); raw = (-1/c)^k sigma_k
  const GaussRational c = real ? GaussRational(Rational(1)) : GaussRational(0, -1);
  const GaussRational raw_factor = real ? GaussRational(Rational(-1)) : GaussRational(0, -1);
  std::vector<GaussPoly> e = elementary_symmetric(g);
  GaussRational ck(Rational(1));
  GaussRational norm(Rational(1));
  for (std::size_t k = 1; k < e.size() && k <= max_k; ++k) {
    ck *= c;
    norm *= raw_factor;
    GaussPoly s = ck * e[k];
    if (s.is_zero()) continue;
    InvariantPolynomial p;
    p.name = "sigma" + std::to_string(k);
    p.poly = RationalPoly(n);
    for (const auto& [mono, z] : s.terms()) {
      if (!z.is_real()) {
        throw InvalidLieAlgebra(g.name() + ": sigma" + std::to_string(k) +
                                " is not rational after normalization");
      }
      p.poly.add_term(mono, z.re);
    }
    p.normalization = norm;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace eqdc
