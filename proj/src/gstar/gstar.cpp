#include "eqdc/gstar/gstar.hpp"

#include "eqdc/error.hpp"

namespace eqdc {

GStarAlgebra GStarAlgebra::make(AlgebraPtr carrier, LieAlgebra lie, Derivation d,
                                std::vector<Derivation> iota) {
  if (iota.size() != lie.dim()) throw DimensionMismatch("one contraction per Lie algebra basis vector");
  if (d.degree() != 1) throw DegreeMismatch("differential must have degree 1");
  for (const auto& i : iota) {
    if (i.degree() != -1) throw DegreeMismatch("contractions must have degree -1");
  }
  GStarAlgebra a{std::move(carrier), std::move(lie), std::move(d), std::move(iota), {}, {}};
  for (const auto& i : a.iota) a.lie_derivs.push_back(commutator(a.d, i));
  return a;
}

GStarReport check_gstar(const GStarAlgebra& a, int max_degree) {
  GStarReport report;
  const auto& alg = a.carrier;
  const std::size_t n = a.lie.dim();
  auto note = [&](const char* relation, const Monomial& m, const Element& defect) {
    ++report.checks;
    if (defect.is_zero()) return;
    report.violations.push_back(
        {relation, alg->monomial_string(m), defect.to_string(), alg->degree(m)});
  };
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& m : alg->degree_basis(deg)) {
      Element x = Element::monomial(alg, m);
      Element dx = a.d(x);
      note("d^2", m, a.d(dx));
      std::vector<Element> ix;
      for (std::size_t i = 0; i < n; ++i) ix.push_back(a.iota[i](x));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) note("iota_anticommute", m, a.iota[i](ix[j]) + a.iota[j](ix[i]));
      }
      std::vector<Element> lx;
      for (std::size_t i = 0; i < n; ++i) {
        lx.push_back(a.lie_derivs[i](x));
        note("cartan", m, a.d(ix[i]) + a.iota[i](dx) - lx[i]);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Element defect = a.lie_derivs[i](ix[j]) - a.iota[j](lx[i]);
          for (std::size_t c = 0; c < n; ++c) {
            if (a.lie.structure(c, i, j) != 0) defect -= a.lie.structure(c, i, j) * ix[c];
          }
          note("lie_iota", m, defect);
        }
        note("lie_d", m, a.lie_derivs[i](dx) - a.d(lx[i]));
      }
      for (const auto& phi : a.finite_action) note("finite_action", m, phi(dx) - a.d(phi(x)));
    }
  }
  return report;
}

Derivation contraction_sum(const std::vector<Element>& coeffs, const std::vector<Derivation>& ds) {
  if (coeffs.size() != ds.size() || ds.empty()) throw DimensionMismatch("contraction_sum sizes");
  const AlgebraPtr& alg = ds[0].algebra();
  std::optional<int> coeff_degree;
  for (const auto& c : coeffs) {
    if (auto dg = c.degree()) {
      if (coeff_degree && *coeff_degree != *dg) throw DegreeMismatch("mixed coefficient degrees");
      coeff_degree = dg;
    }
  }
  const int degree = coeff_degree.value_or(0) + ds[0].degree();
  std::vector<Element> images(alg->size(), Element(alg));
  for (std::size_t i = 0; i < alg->size(); ++i) {
    for (std::size_t a = 0; a < ds.size(); ++a) {
      if (coeffs[a].is_zero()) continue;
      images[i] += coeffs[a] * ds[a].image(i);
    }
  }
  return Derivation(alg, degree, std::move(images));
}

std::vector<std::string> connection_defects(const GStarAlgebra& a, const Connection& theta) {
  std::vector<std::string> out;
  const std::size_t k = theta.lie.dim();
  if (theta.components.size() != k) {
    out.push_back("connection has " + std::to_string(theta.components.size()) +
                  " components, expected " + std::to_string(k));
    return out;
  }
  if (theta.offset + k > a.iota.size()) {
    out.push_back("connection directions exceed the acting Lie algebra");
    return out;
  }
  for (std::size_t b = 0; b < k; ++b) {
    if (!theta.components[b].is_homogeneous_of(1)) {
      out.push_back("component " + std::to_string(b + 1) + " is not of degree 1");
    }
  }
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < a.iota.size(); ++x) {
    const bool own = x >= theta.offset && x < theta.offset + k;
    for (std::size_t b = 0; b < k; ++b) {
      if (own) {
        Element got = a.iota[x](theta.components[b]);
        Element want = Element::scalar(a.carrier, x - theta.offset == b ? 1 : 0);
        if (!(got == want)) {
          out.push_back("iota_" + a.lie.basis()[x] + " Theta^" + std::to_string(b + 1) + " = " +
                        got.to_string() + ", expected " + want.to_string());
        }
      }
      Element l = a.lie_derivs[x](theta.components[b]);
      if (own) {
        const std::size_t xa = x - theta.offset;
        for (std::size_t e = 0; e < k; ++e) {
          if (theta.lie.structure(b, xa, e) != 0) l += theta.lie.structure(b, xa, e) * theta.components[e];
        }
      }
      if (!l.is_zero()) {
        out.push_back("equivariance fails for L_" + a.lie.basis()[x] + " on Theta^" +
                      std::to_string(b + 1) + ": defect " + l.to_string());
      }
    }
  }
  return out;
}

void require_connection(const GStarAlgebra& a, const Connection& theta) {
  auto defects = connection_defects(a, theta);
  if (!defects.empty()) throw NotAConnection(defects.front());
}

std::vector<Element> curvature_form(const Derivation& d, const LieAlgebra& lie,
                                    const std::vector<Element>& theta) {
  const std::size_t k = lie.dim();
  std::vector<Element> omega;
  for (std::size_t a = 0; a < k; ++a) {
    Element w = d(theta[a]);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        if (lie.structure(a, b, c) != 0) w += Rational(1, 2) * lie.structure(a, b, c) * (theta[b] * theta[c]);
      }
    }
    omega.push_back(std::move(w));
  }
  return omega;
}

std::vector<Element> curvature(const GStarAlgebra& a, const Connection& theta) {
  require_connection(a, theta);
  auto omega = curvature_form(a.d, theta.lie, theta.components);
  const std::size_t k = theta.lie.dim();
  for (std::size_t x = 0; x < a.iota.size(); ++x) {
    const bool own = x >= theta.offset && x < theta.offset + k;
    for (std::size_t b = 0; b < k; ++b) {
      if (own && !a.iota[x](omega[b]).is_zero()) {
        throw NotAConnection("curvature component " + std::to_string(b + 1) + " is not horizontal");
      }
      Element l = a.lie_derivs[x](omega[b]);
      if (own) {
        const std::size_t xa = x - theta.offset;
        for (std::size_t e = 0; e < k; ++e) {
          if (theta.lie.structure(b, xa, e) != 0) l += theta.lie.structure(b, xa, e) * omega[e];
        }
      }
      if (!l.is_zero()) {
        throw NotAConnection("curvature component " + std::to_string(b + 1) + " is not equivariant");
      }
    }
  }
  return omega;
}

std::size_t cohomology_dim(const Derivation& d, int n) {
  RationalMatrix next = derivation_matrix(d, n);
  std::size_t dim = d.algebra()->degree_basis(n).size();
  std::size_t r_prev = n > 0 ? rank(derivation_matrix(d, n - 1)) : 0;
  return dim - rank(next) - r_prev;
}

namespace {

// Stacks the matrices of the given linear maps on the degree-n basis and
// returns the kernel as elements.
std::vector<Element> joint_kernel(const AlgebraPtr& alg, int n,
                                  const std::vector<std::function<Element(const Element&)>>& maps,
                                  const std::vector<int>& shifts) {
  auto basis = alg->degree_basis(n);
  std::size_t rows = 0;
  std::vector<RationalMatrix> blocks;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    blocks.push_back(matrix_of(maps[i], alg, basis, alg->degree_basis(n + shifts[i])));
    rows += blocks.back().rows();
  }
  RationalMatrix stacked(rows, basis.size());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (const auto& [idx, v] : b.entries()) stacked.set(r0 + idx.first, idx.second, v);
    r0 += b.rows();
  }
  std::vector<Element> out;
  for (const auto& v : kernel_basis(stacked)) out.push_back(from_coordinates(alg, basis, v));
  return out;
}

std::vector<Element> kernel_of(const GStarAlgebra& a, int n, bool horizontal) {
  std::vector<std::function<Element(const Element&)>> maps;
  std::vector<int> shifts;
  for (const auto& l : a.lie_derivs) {
    maps.push_back([&l](const Element& x) { return l(x); });
    shifts.push_back(0);
  }
  for (const auto& phi : a.finite_action) {
    maps.push_back([&phi](const Element& x) { return phi(x) - x; });
    shifts.push_back(0);
  }
  if (horizontal) {
    for (const auto& i : a.iota) {
      maps.push_back([&i](const Element& x) { return i(x); });
      shifts.push_back(-1);
    }
  }
  return joint_kernel(a.carrier, n, maps, shifts);
}

}  // namespace

std::vector<Element> invariant_subspace(const GStarAlgebra& a, int n) { return kernel_of(a, n, false); }

std::vector<Element> basic_subcomplex(const GStarAlgebra& a, int n) { return kernel_of(a, n, true); }

std::size_t basic_cohomology_dim(const GStarAlgebra& a, int n) {
  auto image_rank = [&](int deg) -> std::size_t {
    if (deg < 0) return 0;
    auto basis = basic_subcomplex(a, deg);
    if (basis.empty()) return 0;
    auto target = a.carrier->degree_basis(deg + 1);
    std::vector<RationalVector> cols;
    for (const auto& b : basis) cols.push_back(coordinates(a.d(b), target));
    return rank(RationalMatrix::from_columns(cols, target.size()));
  };
  return basic_subcomplex(a, n).size() - image_rank(n) - image_rank(n - 1);
}

}  // namespace eqdc
