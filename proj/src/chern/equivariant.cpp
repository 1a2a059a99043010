#include "eqdc/chern/equivariant.hpp"

#include "eqdc/chern/chern_weil.hpp"
#include "eqdc/error.hpp"

namespace eqdc {

namespace {

Element zero_of(const AlgebraPtr& alg) { return Element(alg); }

std::vector<Element> apply_all(const AlgebraMap& f, const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

// -sum_e c^b_{ae} v^e: the coadjoint action of xi_a on a k-valued element.
Element coadjoint(const LieAlgebra& k, std::size_t a, std::size_t b, const std::vector<Element>& v) {
  Element out = zero_of(v.at(0).algebra());
  for (std::size_t e = 0; e < k.dim(); ++e) {
    if (k.structure(b, a, e) != 0) out -= k.structure(b, a, e) * v[e];
  }
  return out;
}

void check_slice(const LieAlgebra& sub, const LieAlgebra& sum, std::size_t offset) {
  if (offset + sub.dim() > sum.dim()) throw DimensionMismatch(sub.name() + " does not fit in " + sum.name());
  for (std::size_t a = 0; a < sub.dim(); ++a) {
    if (sub.basis()[a] != sum.basis()[offset + a]) {
      throw CarrierMismatch("basis vector " + sub.basis()[a] + " is not slot " +
                            std::to_string(offset + a + 1) + " of " + sum.name());
    }
    for (std::size_t b = 0; b < sub.dim(); ++b) {
      for (std::size_t c = 0; c < sub.dim(); ++c) {
        if (sub.structure(a, b, c) != sum.structure(offset + a, offset + b, offset + c)) {
          throw CarrierMismatch(sub.name() + " is not a subalgebra slice of " + sum.name());
        }
      }
    }
  }
}

void check_zero(std::vector<std::string>& out, const std::string& what, const Element& e) {
  if (!e.is_zero()) out.push_back(what + " = " + e.to_string() + ", expected 0");
}

void check_equal(std::vector<std::string>& out, const std::string& what, const Element& got,
                 const Element& want) {
  if (!(got == want)) out.push_back(what + " = " + got.to_string() + ", expected " + want.to_string());
}

// iota^g = 0, L^g = 0, iota^k = delta (connection) or 0 (tensorial), L^k = coadjoint.
void check_k_valued(std::vector<std::string>& out, const std::string& label, const GStarAlgebra& total,
                    std::size_t g_dim, const LieAlgebra& k, const std::vector<Element>& v,
                    bool is_connection) {
  const AlgebraPtr& alg = total.carrier;
  for (std::size_t b = 0; b < k.dim(); ++b) {
    const std::string name = label + "^" + std::to_string(b + 1);
    for (std::size_t a = 0; a < g_dim; ++a) {
      check_zero(out, "iota_" + total.lie.basis()[a] + " " + name, total.iota[a](v[b]));
      check_zero(out, "L_" + total.lie.basis()[a] + " " + name, total.lie_derivs[a](v[b]));
    }
    for (std::size_t a = 0; a < k.dim(); ++a) {
      const std::size_t s = g_dim + a;
      Element want = is_connection && a == b ? Element::scalar(alg, 1) : zero_of(alg);
      check_equal(out, "iota_" + total.lie.basis()[s] + " " + name, total.iota[s](v[b]), want);
      check_equal(out, "L_" + total.lie.basis()[s] + " " + name, total.lie_derivs[s](v[b]),
                  coadjoint(k, a, b, v));
    }
  }
}

}  // namespace

GStarAlgebra extend_action(const GStarAlgebra& a, const LieAlgebra& sum, std::size_t offset) {
  check_slice(a.lie, sum, offset);
  std::vector<Derivation> iota(sum.dim(), Derivation::zero(a.carrier, -1));
  for (std::size_t i = 0; i < a.lie.dim(); ++i) iota[offset + i] = a.iota[i];
  GStarAlgebra out = GStarAlgebra::make(a.carrier, sum, a.d, std::move(iota));
  out.finite_action = a.finite_action;
  return out;
}

GStarTensor tensor_gstar(const GStarAlgebra& a, const GStarAlgebra& b) {
  if (!(a.lie == b.lie)) throw CarrierMismatch("tensor factors carry different Lie algebras");
  TensorProduct tp = tensor(a.carrier, b.carrier);
  Derivation d = tp.extend_left(a.d) + tp.extend_right(b.d);
  std::vector<Derivation> iota;
  for (std::size_t i = 0; i < a.lie.dim(); ++i) {
    iota.push_back(tp.extend_left(a.iota[i]) + tp.extend_right(b.iota[i]));
  }
  GStarAlgebra total = GStarAlgebra::make(tp.algebra, a.lie, d, std::move(iota));
  return {std::move(tp), std::move(total)};
}

Derivation EquivariantConnection::iota_theta() const {
  std::vector<Element> coeffs;
  std::vector<Derivation> iotas;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    coeffs.push_back(model.product.left(weil_g.theta_gen(a)));
    iotas.push_back(model.product.extend_right(base.iota[a]));
  }
  return contraction_sum(coeffs, iotas);
}

Element EquivariantConnection::mathai_quillen(const Element& x) const {
  Derivation it = iota_theta();
  Element out = x;
  Element term = x;
  for (int n = 1; !term.is_zero(); ++n) {
    term = Rational(1, n) * it(term);
    out += term;
  }
  return out;
}

EquivariantConnection equivariant_connection(const LieAlgebra& g, const LieAlgebra& k,
                                             const GStarAlgebra& a, const Connection& theta) {
  const LieAlgebra& sum = a.lie;
  check_slice(g, sum, 0);
  check_slice(k, sum, g.dim());
  if (theta.offset != g.dim() || !(theta.lie == k)) {
    throw NotAConnection("Theta must be a " + k.name() + "-connection at slot " + std::to_string(g.dim() + 1));
  }
  require_connection(a, theta);

  EquivariantConnection ec;
  ec.g = g;
  ec.k = k;
  ec.weil_g = build_weil(g);
  ec.base = a;
  ec.theta = theta;
  ec.model = tensor_gstar(extend_action(ec.weil_g.gstar, sum, 0), a);
  const TensorProduct& tp = ec.model.product;

  std::vector<Element> theta_up = apply_all(tp.right, theta.components);
  Derivation it = ec.iota_theta();
  for (const auto& t : theta_up) ec.theta_G.push_back(t - it(t));
  ec.omega_G_weil = curvature_form(ec.model.total.d, k, ec.theta_G);

  // Omega - sum_a u^a iota^A_a Theta
  std::vector<Element> omega = apply_all(tp.right, curvature_form(a.d, k, theta.components));
  for (std::size_t b = 0; b < k.dim(); ++b) {
    Element c = omega[b];
    for (std::size_t i = 0; i < g.dim(); ++i) {
      c -= tp.left(ec.weil_g.u_gen(i)) * tp.right(a.iota[i](theta.components[b]));
    }
    ec.omega_G_cartan.push_back(c);
  }

  auto defects = equivariant_connection_defects(ec);
  if (!defects.empty()) throw NotAConnection("equivariant connection: " + defects.front());
  return ec;
}

std::vector<std::string> equivariant_connection_defects(const EquivariantConnection& ec) {
  std::vector<std::string> out;
  const GStarAlgebra& total = ec.total();
  check_k_valued(out, "Theta_G", total, ec.g.dim(), ec.k, ec.theta_G, true);
  check_k_valued(out, "Omega_G", total, ec.g.dim(), ec.k, ec.omega_G_weil, false);
  for (std::size_t b = 0; b < ec.k.dim(); ++b) {
    check_equal(out, "exp(iota_theta) Omega_G^" + std::to_string(b + 1),
                ec.mathai_quillen(ec.omega_G_weil[b]), ec.omega_G_cartan[b]);
  }
  return out;
}

Element equivariant_chern_weil(const InvariantPolynomial& w, const EquivariantConnection& ec) {
  require_invariant(ec.k, w);
  return evaluate_on(w.poly, ec.omega_G_weil, ec.total().carrier);
}

Element equivariant_chern_weil_cartan(const InvariantPolynomial& w, const EquivariantConnection& ec) {
  require_invariant(ec.k, w);
  return evaluate_on(w.poly, ec.omega_G_cartan, ec.total().carrier);
}

AlgebraMap equivariant_weil_map(const EquivariantConnection& ec, const WeilAlgebra& weil_k) {
  std::vector<Element> images = ec.theta_G;
  images.insert(images.end(), ec.omega_G_weil.begin(), ec.omega_G_weil.end());
  return AlgebraMap(weil_k.algebra(), ec.total().carrier, std::move(images));
}

Element equivariant_chern_simons(const InvariantPolynomial& w, const EquivariantConnection& ec) {
  WeilAlgebra weil_k = build_weil(ec.k, "_k");
  return equivariant_weil_map(ec, weil_k)(chern_simons(w, weil_k));
}

PullbackConnection pullback_connection(const GStarAlgebra& a_p, const Connection& theta_p,
                                       const GStarAlgebra& q, const Connection& theta_q) {
  const LieAlgebra& sum = q.lie;
  const LieAlgebra& g = a_p.lie;
  const LieAlgebra& k = theta_q.lie;
  check_slice(g, sum, 0);
  check_slice(k, sum, g.dim());
  if (theta_q.offset != g.dim()) throw NotAConnection("Theta_Q must sit after the g slots");
  require_connection(a_p, theta_p);
  require_connection(q, theta_q);

  PullbackConnection out;
  out.model = tensor_gstar(extend_action(a_p, sum, 0), q);
  const TensorProduct& tp = out.model.product;
  out.connection.lie = sum;
  out.connection.offset = 0;
  std::vector<Element> tp_comp = apply_all(tp.left, theta_p.components);
  out.connection.components = tp_comp;
  for (const auto& t : theta_q.components) {
    Element c = tp.right(t);
    for (std::size_t a = 0; a < g.dim(); ++a) c -= tp_comp[a] * tp.right(q.iota[a](t));
    out.connection.components.push_back(c);
  }
  auto defects = connection_defects(out.model.total, out.connection);
  if (!defects.empty()) throw NotAConnection("pullback connection: " + defects.front());
  return out;
}

ReductionMap theta_g_star(const EquivariantConnection& ec) {
  const LieAlgebra& sum = ec.base.lie;
  ReductionMap r;
  // the W(k) factor must not reuse names of W(g) or A
  auto taken = [&](const std::string& suffix) {
    for (const auto& names : {weil_theta_names(ec.k, suffix), weil_u_names(ec.k, suffix)}) {
      for (const auto& nm : names) {
        if (ec.total().carrier->find(nm)) return true;
      }
    }
    return false;
  };
  std::string suffix = "_k";
  for (int i = 2; taken(suffix); ++i) suffix = "_k" + std::to_string(i);
  r.weil_k = build_weil(ec.k, suffix);
  GStarTensor weils = tensor_gstar(extend_action(ec.weil_g.gstar, sum, 0),
                                   extend_action(r.weil_k.gstar, sum, ec.g.dim()));
  GStarTensor src = tensor_gstar(weils.total, ec.base);
  r.source = src.total;

  const AlgebraPtr& target = ec.total().carrier;
  const std::size_t ng = ec.weil_g.algebra()->size();
  const std::size_t nk = r.weil_k.algebra()->size();
  std::vector<Element> images;
  for (std::size_t i = 0; i < ng; ++i) images.push_back(Element::generator(target, i));
  for (const auto& t : ec.theta_G) images.push_back(t);
  for (const auto& o : ec.omega_G_weil) images.push_back(o);
  for (std::size_t i = 0; i < ec.base.carrier->size(); ++i) images.push_back(Element::generator(target, ng + i));
  r.map = AlgebraMap(r.source.carrier, target, std::move(images));

  std::vector<Element> back;
  for (std::size_t i = 0; i < ng; ++i) back.push_back(Element::generator(r.source.carrier, i));
  for (std::size_t i = 0; i < ec.base.carrier->size(); ++i) {
    back.push_back(Element::generator(r.source.carrier, ng + nk + i));
  }
  r.inclusion = AlgebraMap(target, r.source.carrier, std::move(back));
  return r;
}

namespace {

void chain_map_defects(std::vector<std::string>& out, const AlgebraMap& f, const GStarAlgebra& src,
                       const GStarAlgebra& tgt, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& m : src.carrier->degree_basis(n)) {
      Element x = Element::monomial(src.carrier, m);
      Element lhs = f(src.d(x));
      Element rhs = tgt.d(f(x));
      if (!(lhs == rhs)) {
        out.push_back("f d != d f on " + x.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
      }
    }
  }
}

void basic_defects(std::vector<std::string>& out, const AlgebraMap& f, const GStarAlgebra& src,
                   const GStarAlgebra& tgt, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& x : basic_subcomplex(src, n)) {
      Element y = f(x);
      for (std::size_t a = 0; a < tgt.lie.dim(); ++a) {
        if (!tgt.iota[a](y).is_zero() || !tgt.lie_derivs[a](y).is_zero()) {
          out.push_back("image of basic " + x.to_string() + " is not basic");
          break;
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> reduction_defects(const EquivariantConnection& ec, const ReductionMap& r,
                                           int max_degree) {
  std::vector<std::string> out;
  chain_map_defects(out, r.map, r.source, ec.total(), max_degree);
  basic_defects(out, r.map, r.source, ec.total(), max_degree);
  const AlgebraPtr& target = ec.total().carrier;
  for (std::size_t i = 0; i < target->size(); ++i) {
    Element x = Element::generator(target, i);
    check_equal(out, "map(inclusion(" + x.to_string() + "))", r.map(r.inclusion(x)), x);
  }
  return out;
}

AssociatedMap associated_forms(const RationalMatrix& phi, const AlgebraMap& f, const GStarAlgebra& n,
                               const GStarAlgebra& m) {
  const LieAlgebra& g1 = m.lie;
  const LieAlgebra& g2 = n.lie;
  if (phi.rows() != g2.dim() || phi.cols() != g1.dim()) {
    throw DimensionMismatch("phi must be a " + std::to_string(g2.dim()) + "x" + std::to_string(g1.dim()) +
                            " matrix");
  }
  // phi([xi_i, xi_j]) = [phi xi_i, phi xi_j]
  for (std::size_t i = 0; i < g1.dim(); ++i) {
    for (std::size_t j = i + 1; j < g1.dim(); ++j) {
      for (std::size_t c = 0; c < g2.dim(); ++c) {
        Rational lhs = 0;
        for (std::size_t e = 0; e < g1.dim(); ++e) lhs += phi.at(c, e) * g1.structure(e, i, j);
        Rational rhs = 0;
        for (std::size_t a = 0; a < g2.dim(); ++a) {
          for (std::size_t b = 0; b < g2.dim(); ++b) {
            rhs += phi.at(a, i) * phi.at(b, j) * g2.structure(c, a, b);
          }
        }
        if (lhs != rhs) {
          throw NotAHomomorphism("phi does not preserve [" + g1.basis()[i] + ", " + g1.basis()[j] + "]");
        }
      }
    }
  }
  if (f.source() != n.carrier || f.target() != m.carrier) throw CarrierMismatch("F must map N to M");
  for (std::size_t i = 0; i < n.carrier->size(); ++i) {
    Element x = Element::generator(n.carrier, i);
    if (!(f(n.d(x)) == m.d(f(x)))) throw NotAHomomorphism("F does not commute with d on " + x.to_string());
  }

  AssociatedMap out{weil_model(n), weil_model(m), {}};
  const WeilAlgebra& w1 = out.target.weil;
  const TensorProduct& tp1 = out.target.product;
  std::vector<Element> images;
  for (int part = 0; part < 2; ++part) {
    for (std::size_t j = 0; j < g2.dim(); ++j) {
      Element img(tp1.algebra);
      for (std::size_t i = 0; i < g1.dim(); ++i) {
        if (phi.at(j, i) != 0) img += phi.at(j, i) * tp1.left(part == 0 ? w1.theta_gen(i) : w1.u_gen(i));
      }
      images.push_back(img);
    }
  }
  for (std::size_t i = 0; i < n.carrier->size(); ++i) images.push_back(tp1.right(f.image(i)));
  out.map = AlgebraMap(out.source.total.carrier, tp1.algebra, std::move(images));
  return out;
}

std::vector<std::string> associated_defects(const AssociatedMap& a, int max_degree) {
  std::vector<std::string> out;
  chain_map_defects(out, a.map, a.source.total, a.target.total, max_degree);
  basic_defects(out, a.map, a.source.total, a.target.total, max_degree);
  return out;
}

}  // namespace eqdc
