#include "eqdc/gstar/weil.hpp"

#include "eqdc/error.hpp"

namespace eqdc {

std::vector<std::string> weil_theta_names(const LieAlgebra& g, const std::string& suffix) {
  if (g.dim() == 1) return {"theta" + suffix};
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= g.dim(); ++a) out.push_back("theta" + std::to_string(a) + suffix);
  return out;
}

std::vector<std::string> weil_u_names(const LieAlgebra& g, const std::string& suffix) {
  if (g.dim() == 1) return {"u" + suffix};
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= g.dim(); ++a) out.push_back("u" + std::to_string(a) + suffix);
  return out;
}

Element WeilAlgebra::from_polynomial(const RationalPoly& p) const {
  if (p.nvars() != dim()) throw DimensionMismatch("polynomial variable count differs from dim g");
  Element out(algebra());
  for (const auto& [e, q] : p.terms()) {
    Monomial m = algebra()->unit();
    for (std::size_t a = 0; a < dim(); ++a) m[dim() + a] = e[a];
    out.add_term(m, q);
  }
  return out;
}

WeilAlgebra build_weil(const LieAlgebra& g, const std::string& suffix) {
  require_valid(g);
  const std::size_t n = g.dim();
  std::vector<Generator> gens;
  for (const auto& name : weil_theta_names(g, suffix)) gens.push_back({name, 1, std::pair{0, 1}});
  for (const auto& name : weil_u_names(g, suffix)) gens.push_back({name, 2, std::pair{2, 0}});
  AlgebraPtr w = GradedAlgebra::make(std::move(gens));

  auto theta = [&](std::size_t a) { return Element::generator(w, a); };
  auto u = [&](std::size_t a) { return Element::generator(w, n + a); };

  std::vector<Element> ce(2 * n, Element(w));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.structure(a, b, c) != 0) ce[a] -= Rational(1, 2) * g.structure(a, b, c) * (theta(b) * theta(c));
      }
    }
  }
  std::vector<Element> first(2 * n, Element(w));
  for (std::size_t a = 0; a < n; ++a) first[a] = ce[a] + u(a);
  Derivation d0(w, 1, first);
  // d_W u^a is forced by d_W^2 theta^a = 0
  for (std::size_t a = 0; a < n; ++a) ce[n + a] = -d0(ce[a]);

  std::vector<Element> koszul(2 * n, Element(w));
  for (std::size_t a = 0; a < n; ++a) koszul[a] = u(a);

  Derivation d_lie(w, 1, ce);
  Derivation d_koszul(w, 1, koszul);
  std::vector<Derivation> iota;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Element> images(2 * n, Element(w));
    images[a] = Element::scalar(w, 1);
    iota.emplace_back(w, -1, images);
  }
  WeilAlgebra out{GStarAlgebra::make(w, g, d_lie + d_koszul, std::move(iota)), Connection{}, d_lie,
                  d_koszul};
  out.theta.lie = g;
  for (std::size_t a = 0; a < n; ++a) out.theta.components.push_back(theta(a));
  return out;
}

WeilHomomorphism weil_homomorphism(const GStarAlgebra& a, const Connection& theta) {
  auto omega = curvature(a, theta);
  WeilAlgebra w = build_weil(theta.lie);
  std::vector<Element> images = theta.components;
  images.insert(images.end(), omega.begin(), omega.end());
  AlgebraMap map(w.algebra(), a.carrier, std::move(images));
  return {std::move(w), std::move(map)};
}

std::vector<std::string> weil_homomorphism_defects(const GStarAlgebra& a, const Connection& theta,
                                                   const WeilHomomorphism& f, int max_degree) {
  std::vector<std::string> out;
  const auto& w = f.weil.gstar;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& m : w.carrier->degree_basis(deg)) {
      Element x = Element::monomial(w.carrier, m);
      Element fx = f.map(x);
      if (!(f.map(w.d(x)) == a.d(fx))) out.push_back("d at " + w.carrier->monomial_string(m));
      for (std::size_t b = 0; b < w.lie.dim(); ++b) {
        if (!(f.map(w.iota[b](x)) == a.iota[theta.offset + b](fx))) {
          out.push_back("iota_" + std::to_string(b + 1) + " at " + w.carrier->monomial_string(m));
        }
        if (!(f.map(w.lie_derivs[b](x)) == a.lie_derivs[theta.offset + b](fx))) {
          out.push_back("L_" + std::to_string(b + 1) + " at " + w.carrier->monomial_string(m));
        }
      }
    }
  }
  return out;
}

bool WeilTensor::theta_free(const Element& e) const {
  const std::size_t n = weil.dim();
  for (const auto& [m, q] : e.terms()) {
    for (std::size_t a = 0; a < n; ++a) {
      if (m[a] != 0) return false;
    }
  }
  return true;
}

WeilTensor weil_model(const GStarAlgebra& model, const std::string& weil_suffix) {
  WeilAlgebra w = build_weil(model.lie, weil_suffix);
  TensorProduct tp = tensor(w.algebra(), model.carrier);
  Derivation d = tp.extend_left(w.gstar.d) + tp.extend_right(model.d);
  std::vector<Derivation> iota;
  for (std::size_t a = 0; a < model.lie.dim(); ++a) {
    iota.push_back(tp.extend_left(w.gstar.iota[a]) + tp.extend_right(model.iota[a]));
  }
  GStarAlgebra total = GStarAlgebra::make(tp.algebra, model.lie, d, std::move(iota));
  for (const auto& phi : model.finite_action) {
    std::vector<Element> images;
    for (std::size_t i = 0; i < w.algebra()->size(); ++i) images.push_back(Element::generator(tp.algebra, i));
    for (std::size_t i = 0; i < model.carrier->size(); ++i) images.push_back(tp.right(phi.image(i)));
    total.finite_action.emplace_back(tp.algebra, tp.algebra, std::move(images));
  }
  return {std::move(w), model, std::move(tp), std::move(total)};
}

namespace {

// Re-expresses an element of the ambient algebra that only involves generators
// offset.. in the sub-algebra `sub`; nullopt if other generators occur.
std::optional<Element> restrict_to(const Element& e, const AlgebraPtr& sub, std::size_t offset) {
  Element out(sub);
  for (const auto& [m, q] : e.terms()) {
    for (std::size_t i = 0; i < offset; ++i) {
      if (m[i] != 0) return std::nullopt;
    }
    out.add_term(Monomial(m.begin() + long(offset), m.end()), q);
  }
  return out;
}

}  // namespace

WeilTensor as_weil_tensor(const GStarAlgebra& a) {
  const LieAlgebra& g = a.lie;
  const std::size_t n = g.dim();
  const auto& alg = a.carrier;
  if (alg->size() < 2 * n || n == 0) throw NoWeilFactor("carrier is too small to contain W(g)");
  const std::string first = alg->generator(0).name;
  const std::string stem = n == 1 ? "theta" : "theta1";
  if (first.rfind(stem, 0) != 0) {
    throw NoWeilFactor("first generator '" + first + "' is not a Weil generator " + stem);
  }
  const std::string suffix = first.substr(stem.size());
  auto tn = weil_theta_names(g, suffix);
  auto un = weil_u_names(g, suffix);
  for (std::size_t i = 0; i < n; ++i) {
    if (alg->generator(i).name != tn[i] || alg->generator(n + i).name != un[i]) {
      throw NoWeilFactor("generators do not start with " + tn[0] + ".." + un[n - 1]);
    }
  }
  std::vector<Generator> rest(alg->generators().begin() + long(2 * n), alg->generators().end());
  AlgebraPtr m_alg = GradedAlgebra::make(rest, alg->weight_cap());
  std::vector<Element> d_images;
  std::vector<std::vector<Element>> iota_images(n);
  for (std::size_t i = 2 * n; i < alg->size(); ++i) {
    auto di = restrict_to(a.d.image(i), m_alg, 2 * n);
    if (!di) throw NoWeilFactor("d of '" + alg->generator(i).name + "' leaves the model factor");
    d_images.push_back(*di);
    for (std::size_t b = 0; b < n; ++b) {
      auto ii = restrict_to(a.iota[b].image(i), m_alg, 2 * n);
      if (!ii) throw NoWeilFactor("iota of '" + alg->generator(i).name + "' leaves the model factor");
      iota_images[b].push_back(*ii);
    }
  }
  std::vector<Derivation> iota;
  for (auto& imgs : iota_images) iota.emplace_back(m_alg, -1, std::move(imgs));
  GStarAlgebra model = GStarAlgebra::make(m_alg, g, Derivation(m_alg, 1, d_images), std::move(iota));
  WeilTensor wt = weil_model(model, suffix);
  if (!(wt.total.d.images() == a.d.images())) {
    throw NoWeilFactor("differential on the Weil generators is not the Weil differential");
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!(wt.total.iota[b].images() == a.iota[b].images())) {
      throw NoWeilFactor("contraction " + g.basis()[b] + " is not the Weil contraction");
    }
  }
  return wt;
}

MathaiQuillen::MathaiQuillen(const WeilTensor& w) : w_(w) {
  std::vector<Element> coeffs;
  std::vector<Derivation> iotas;
  for (std::size_t a = 0; a < w.weil.dim(); ++a) {
    coeffs.push_back(Element::generator(w.total.carrier, a));
    iotas.push_back(w.model_iota(a));
  }
  iota_theta_ = contraction_sum(coeffs, iotas);
}

Element MathaiQuillen::exp(const Element& x, int sign) const {
  Element sum = x;
  Element term = x;
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = Rational(sign, long(k)) * iota_theta_(term);
    sum += term;
  }
  return sum;
}

Element MathaiQuillen::conjugated_d(const Element& x) const {
  return forward(w_.total.d(inverse(x)));
}

Derivation cartan_differential(const WeilTensor& w) {
  const auto& alg = w.total.carrier;
  const std::size_t n = w.weil.dim();
  Derivation dm = w.model_d();
  std::vector<Element> images(alg->size(), Element(alg));
  for (std::size_t i = 2 * n; i < alg->size(); ++i) {
    Element x = Element::generator(alg, i);
    Element v = dm(x);
    for (std::size_t a = 0; a < n; ++a) v -= Element::generator(alg, n + a) * w.model_iota(a)(x);
    images[i] = v;
  }
  return Derivation(alg, 1, std::move(images));
}

std::vector<Element> cartan_basis(const WeilTensor& w, int n) {
  const auto& alg = w.total.carrier;
  const std::size_t dim = w.weil.dim();
  std::vector<Monomial> free_basis;
  for (const auto& m : alg->degree_basis(n)) {
    bool theta_free = true;
    for (std::size_t a = 0; a < dim; ++a) theta_free = theta_free && m[a] == 0;
    if (theta_free) free_basis.push_back(m);
  }
  auto full = alg->degree_basis(n);
  RationalMatrix stacked(dim * full.size(), free_basis.size());
  for (std::size_t a = 0; a < dim; ++a) {
    const Derivation& l = w.total.lie_derivs[a];
    RationalMatrix m = matrix_of([&l](const Element& x) { return l(x); }, alg, free_basis, full);
    for (const auto& [idx, v] : m.entries()) stacked.set(a * full.size() + idx.first, idx.second, v);
  }
  std::vector<Element> out;
  for (const auto& v : kernel_basis(stacked)) out.push_back(from_coordinates(alg, free_basis, v));
  return out;
}

}  // namespace eqdc
