#include "eqdc/liealg/lie_algebra.hpp"

#include <set>

#include "eqdc/error.hpp"

namespace eqdc {

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  GaussMatrix out(n, std::vector<GaussRational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != b.size()) throw DimensionMismatch("matrix product shape mismatch");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

GaussMatrix operator-(const GaussMatrix& a, const GaussMatrix& b) {
  GaussMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b.at(i).at(j);
  return out;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b).second) throw NameCollision("basis name '" + b + "' repeated");
  }
  c_.assign(dim() * dim() * dim(), Rational(0));
}

std::optional<std::size_t> LieAlgebra::find(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == basis_name) return i;
  }
  return std::nullopt;
}

void LieAlgebra::set_structure(std::size_t a, std::size_t b, std::size_t c, const Rational& v) {
  if (a >= dim() || b >= dim() || c >= dim()) throw DimensionMismatch("structure index");
  c_[(a * dim() + b) * dim() + c] = v;
}

void LieAlgebra::set_bracket(std::size_t b, std::size_t c, const RationalVector& value) {
  if (value.size() != dim()) throw DimensionMismatch("bracket value length");
  for (std::size_t a = 0; a < dim(); ++a) {
    set_structure(a, b, c, value[a]);
    set_structure(a, c, b, -value[a]);
  }
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bracket argument length");
  RationalVector out(dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x[b] == 0) continue;
    for (std::size_t c = 0; c < dim(); ++c) {
      if (y[c] == 0) continue;
      for (std::size_t a = 0; a < dim(); ++a) out[a] += structure(a, b, c) * x[b] * y[c];
    }
  }
  return out;
}

void LieAlgebra::set_rep(std::vector<GaussMatrix> matrices) {
  if (matrices.size() != dim()) throw DimensionMismatch("one representation matrix per basis vector");
  const std::size_t n = matrices.empty() ? 0 : matrices[0].size();
  for (const auto& m : matrices) {
    if (m.size() != n) throw DimensionMismatch("representation matrices differ in size");
    for (const auto& row : m) {
      if (row.size() != n) throw DimensionMismatch("representation matrix not square");
    }
  }
  rep_ = std::move(matrices);
}

std::size_t LieAlgebra::rep_size() const { return rep_ && !rep_->empty() ? (*rep_)[0].size() : 0; }

LieReport validate_lie(const LieAlgebra& g) {
  LieReport report;
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        Rational s = g.structure(a, b, c) + g.structure(a, c, b);
        if (s != 0) {
          report.violations.push_back({"antisymmetry", {a + 1, b + 1, c + 1},
                                       "c^a_bc + c^a_cb = " + to_string(s)});
        }
      }
    }
  }
  // [[x_a, x_b], x_c] + cyclic = 0, component e
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t e = 0; e < n; ++e) {
          Rational s = 0;
          for (std::size_t d = 0; d < n; ++d) {
            s += g.structure(d, a, b) * g.structure(e, d, c) +
                 g.structure(d, b, c) * g.structure(e, d, a) +
                 g.structure(d, c, a) * g.structure(e, d, b);
          }
          if (s != 0) {
            report.violations.push_back({"jacobi", {a + 1, b + 1, c + 1},
                                         "component " + std::to_string(e + 1) + " is " +
                                             to_string(s)});
          }
        }
      }
    }
  }
  if (g.rep()) {
    const auto& rho = *g.rep();
    const std::size_t m = g.rep_size();
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        GaussMatrix lhs(m, std::vector<GaussRational>(m));
        for (std::size_t a = 0; a < n; ++a) {
          if (g.structure(a, b, c) == 0) continue;
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
              lhs[i][j] += GaussRational(g.structure(a, b, c)) * rho[a][i][j];
        }
        GaussMatrix rhs = rho[b] * rho[c] - rho[c] * rho[b];
        if (lhs != rhs) {
          report.violations.push_back(
              {"representation", {b + 1, c + 1}, "rho([xi_b, xi_c]) != [rho(xi_b), rho(xi_c)]"});
        }
      }
    }
  }
  return report;
}

void require_valid(const LieAlgebra& g) {
  LieReport r = validate_lie(g);
  if (r.ok()) return;
  const auto& v = r.violations.front();
  std::string idx;
  for (auto i : v.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
  throw InvalidLieAlgebra(g.name() + ": " + v.relation + " violated at (" + idx + "): " + v.detail);
}

std::vector<RationalMatrix> coadjoint_matrices(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<RationalMatrix> out;
  for (std::size_t a = 0; a < n; ++a) {
    RationalMatrix m(n, n);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t c = 0; c < n; ++c) m.set(c, e, -g.structure(e, a, c));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<RationalMatrix> adjoint_matrices(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<RationalMatrix> out;
  for (std::size_t a = 0; a < n; ++a) {
    RationalMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t e = 0; e < n; ++e) m.set(e, c, g.structure(e, a, c));
    out.push_back(std::move(m));
  }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& k, const std::string& name) {
  std::vector<std::string> basis = g.basis();
  basis.insert(basis.end(), k.basis().begin(), k.basis().end());
  LieAlgebra s(name, basis);
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) s.set_structure(a, b, c, g.structure(a, b, c));
  for (std::size_t a = 0; a < k.dim(); ++a)
    for (std::size_t b = 0; b < k.dim(); ++b)
      for (std::size_t c = 0; c < k.dim(); ++c)
        s.set_structure(n + a, n + b, n + c, k.structure(a, b, c));
  if (g.rep() && k.rep()) {
    const std::size_t p = g.rep_size(), q = k.rep_size();
    std::vector<GaussMatrix> rho;
    for (std::size_t a = 0; a < s.dim(); ++a) {
      GaussMatrix m(p + q, std::vector<GaussRational>(p + q));
      if (a < n) {
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t j = 0; j < p; ++j) m[i][j] = (*g.rep())[a][i][j];
      } else {
        for (std::size_t i = 0; i < q; ++i)
          for (std::size_t j = 0; j < q; ++j) m[p + i][p + j] = (*k.rep())[a - n][i][j];
      }
      rho.push_back(std::move(m));
    }
    s.set_rep(std::move(rho));
  }
  return s;
}

LieAlgebra renamed(const LieAlgebra& g, const std::string& name,
                   const std::vector<std::string>& basis) {
  if (basis.size() != g.dim()) throw DimensionMismatch("renamed basis length");
  LieAlgebra out(name, basis);
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b)
      for (std::size_t c = 0; c < g.dim(); ++c) out.set_structure(a, b, c, g.structure(a, b, c));
  if (g.rep()) out.set_rep(*g.rep());
  return out;
}

namespace builtin {

namespace {
GaussRational gi(long re_num, long re_den, long im_num, long im_den) {
  return {Rational(re_num, re_den), Rational(im_num, im_den)};
}
}  // namespace

LieAlgebra u1() {
  LieAlgebra g("u1", {"xi"});
  g.set_rep({GaussMatrix{{gi(0, 1, 1, 1)}}});
  return g;
}

LieAlgebra r2() { return LieAlgebra("r2", {"e1", "e2"}); }

LieAlgebra su2() {
  LieAlgebra g("su2", {"xi1", "xi2", "xi3"});
  g.set_bracket(0, 1, {0, 0, 1});
  g.set_bracket(1, 2, {1, 0, 0});
  g.set_bracket(2, 0, {0, 1, 0});
  // xi_a = -(i/2) sigma_a
  GaussRational z;
  g.set_rep({GaussMatrix{{z, gi(0, 1, -1, 2)}, {gi(0, 1, -1, 2), z}},
             GaussMatrix{{z, gi(-1, 2, 0, 1)}, {gi(1, 2, 0, 1), z}},
             GaussMatrix{{gi(0, 1, -1, 2), z}, {z, gi(0, 1, 1, 2)}}});
  return g;
}

LieAlgebra u2() {
  // basis i E11, i E22, E12 - E21, i (E12 + E21)
  LieAlgebra g("u2", {"a", "b", "c", "d"});
  g.set_bracket(0, 2, {0, 0, 0, 1});
  g.set_bracket(0, 3, {0, 0, -1, 0});
  g.set_bracket(1, 2, {0, 0, 0, -1});
  g.set_bracket(1, 3, {0, 0, 1, 0});
  g.set_bracket(2, 3, {2, -2, 0, 0});
  GaussRational z;
  GaussRational one(Rational(1));
  GaussRational i = gi(0, 1, 1, 1);
  g.set_rep({GaussMatrix{{i, z}, {z, z}}, GaussMatrix{{z, z}, {z, i}},
             GaussMatrix{{z, one}, {-one, z}}, GaussMatrix{{z, i}, {i, z}}});
  return g;
}

LieAlgebra heis3() {
  LieAlgebra g("heis3", {"x", "y", "z"});
  g.set_bracket(0, 1, {0, 0, 1});
  return g;
}

LieAlgebra lie_by_name(const std::string& name) {
  if (name == "u1") return u1();
  if (name == "r2") return r2();
  if (name == "su2") return su2();
  if (name == "u2") return u2();
  if (name == "heis3") return heis3();
  throw OutOfRange("unknown Lie algebra '" + name + "'");
}

}  // namespace builtin

}  // namespace eqdc
