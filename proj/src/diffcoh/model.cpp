#include "eqdc/diffcoh/model.hpp"

#include <climits>

#include "eqdc/error.hpp"

namespace eqdc {

std::size_t GeometricModel::rank(int n) const {
  return n < 0 || n > top_degree ? 0 : cochain_rank[std::size_t(n)];
}

std::size_t GeometricModel::forms(int n) const {
  return n < 0 || n > top_degree ? 0 : form_dim[std::size_t(n)];
}

IntegerMatrix GeometricModel::delta_at(int n) const {
  if (n < 0 || n >= top_degree) return IntegerMatrix(rank(n + 1), rank(n));
  return delta[std::size_t(n)];
}

RationalMatrix GeometricModel::d_forms_at(int n) const {
  if (n < 0 || n >= top_degree) return RationalMatrix(forms(n + 1), forms(n));
  return d_forms[std::size_t(n)];
}

RationalMatrix GeometricModel::j_at(int n) const {
  if (n < 0 || n > top_degree) return RationalMatrix(0, 0);
  return j[std::size_t(n)];
}

int GeometricModel::certified_max() const { return exact ? INT_MAX : top_degree - 1; }

void GeometricModel::require_certified(int n) const {
  if (n < 0 || n > certified_max()) {
    throw OutOfRange("degree " + std::to_string(n) + " is outside the certified range 0.." +
                     std::to_string(certified_max()) + " of " + name);
  }
}

RationalVector GeometricModel::cup_product(int p, const RationalVector& a, int q,
                                           const RationalVector& b) const {
  RationalVector out(rank(p + q), Rational(0));
  if (out.empty() || a.empty() || b.empty()) return out;
  auto it = cup.find({p, q});
  if (it == cup.end()) {
    throw OutOfRange("no cup product recorded for degrees " + std::to_string(p) + ", " + std::to_string(q));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] == 0) continue;
      const IntegerVector& e = it->second[i][k];
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += a[i] * b[k] * Rational(e[r]);
    }
  }
  return out;
}

RationalVector GeometricModel::wedge_product(int p, const RationalVector& a, int q,
                                             const RationalVector& b) const {
  RationalVector out(forms(p + q), Rational(0));
  if (out.empty() || a.empty() || b.empty()) return out;
  auto it = wedge.find({p, q});
  if (it == wedge.end()) {
    throw OutOfRange("no form product recorded for degrees " + std::to_string(p) + ", " + std::to_string(q));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] == 0) continue;
      out = add(out, scaled(it->second[i][k], a[i] * b[k]));
    }
  }
  return out;
}

namespace {

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

void fail(const GeometricModel& m, const std::string& what) {
  throw ModelInvariantViolation(m.name + ": " + what);
}

}  // namespace

void validate_model(GeometricModel& m) {
  const auto top = std::size_t(m.top_degree) + 1;
  if (m.cochain_rank.size() != top || m.form_dim.size() != top || m.j.size() != top ||
      m.delta.size() + 1 != top || m.d_forms.size() + 1 != top) {
    fail(m, "degree tables must cover 0.." + std::to_string(m.top_degree));
  }
  for (int n = 0; n <= m.top_degree; ++n) {
    const std::string at = " in degree " + std::to_string(n);
    IntegerMatrix dn = m.delta_at(n);
    if (dn.rows() != m.rank(n + 1) || dn.cols() != m.rank(n)) fail(m, "delta has the wrong shape" + at);
    RationalMatrix fn = m.d_forms_at(n);
    if (fn.rows() != m.forms(n + 1) || fn.cols() != m.forms(n)) fail(m, "d has the wrong shape" + at);
    RationalMatrix jn = m.j_at(n);
    if (jn.rows() != m.rank(n) || jn.cols() != m.forms(n)) fail(m, "j has the wrong shape" + at);
    if (!(m.delta_at(n + 1) * dn).is_zero()) fail(m, "delta^2 != 0" + at);
    if (!(m.d_forms_at(n + 1) * fn).is_zero()) fail(m, "d^2 != 0" + at);
    if (rank(jn) != m.forms(n)) fail(m, "j is not injective" + at);
    if (n < m.top_degree && !(m.j_at(n + 1) * fn == dn.to_rational() * jn)) {
      fail(m, "j d != delta j" + at);
    }
  }
  for (const auto& [pq, table] : m.cup) {
    auto [p, q] = pq;
    if (table.size() != m.rank(p)) fail(m, "cup table has the wrong size");
    for (std::size_t a = 0; a < m.rank(p); ++a) {
      if (table[a].size() != m.rank(q)) fail(m, "cup table has the wrong size");
      for (std::size_t b = 0; b < m.rank(q); ++b) {
        if (table[a][b].size() != m.rank(p + q)) fail(m, "cup table has the wrong size");
      }
    }
  }
  // Leibniz: delta(a b) = delta(a) b + (-1)^p a delta(b)
  for (const auto& [pq, table] : m.cup) {
    auto [p, q] = pq;
    if (p + q >= m.top_degree || !m.has_cup(p + 1, q) || !m.has_cup(p, q + 1)) continue;
    for (std::size_t a = 0; a < m.rank(p); ++a) {
      for (std::size_t b = 0; b < m.rank(q); ++b) {
        RationalVector ea = unit_vector(m.rank(p), a);
        RationalVector eb = unit_vector(m.rank(q), b);
        RationalVector lhs = m.delta_at(p + q).to_rational().apply(m.cup_product(p, ea, q, eb));
        RationalVector rhs = m.cup_product(p + 1, m.delta_at(p).to_rational().apply(ea), q, eb);
        RationalVector second = m.cup_product(p, ea, q + 1, m.delta_at(q).to_rational().apply(eb));
        rhs = p % 2 == 0 ? add(rhs, second) : subtract(rhs, second);
        if (lhs != rhs) fail(m, "cup product violates the Leibniz rule in degrees " + std::to_string(p) + ", " + std::to_string(q));
      }
    }
  }
  m.j_multiplicative = !m.wedge.empty();
  for (const auto& [pq, table] : m.wedge) {
    auto [p, q] = pq;
    if (!m.has_cup(p, q)) {
      m.j_multiplicative = false;
      continue;
    }
    for (std::size_t a = 0; a < m.forms(p); ++a) {
      for (std::size_t b = 0; b < m.forms(q); ++b) {
        RationalVector wa = unit_vector(m.forms(p), a);
        RationalVector wb = unit_vector(m.forms(q), b);
        RationalVector lhs = m.j_at(p + q).apply(m.wedge_product(p, wa, q, wb));
        RationalVector rhs = m.cup_product(p, m.j_at(p).apply(wa), q, m.j_at(q).apply(wb));
        if (lhs != rhs) m.j_multiplicative = false;
      }
    }
  }
}

namespace builtin {

namespace {

void allocate(GeometricModel& m) {
  const auto top = std::size_t(m.top_degree) + 1;
  m.cochain_rank.assign(top, 0);
  m.form_dim.assign(top, 0);
  m.cochain_labels.assign(top, {});
  m.form_labels.assign(top, {});
}

void fill_zero_maps(GeometricModel& m) {
  for (int n = 0; n < m.top_degree; ++n) {
    m.delta.emplace_back(m.rank(n + 1), m.rank(n));
    m.d_forms.emplace_back(m.forms(n + 1), m.forms(n));
  }
  for (int n = 0; n <= m.top_degree; ++n) m.j.emplace_back(m.rank(n), m.forms(n));
}

// One-dimensional-per-degree product table with coefficient `coeff(p, q)`.
template <class Coeff>
void rank_one_cups(GeometricModel& m, Coeff coeff) {
  for (int p = 0; p <= m.top_degree; ++p) {
    for (int q = 0; p + q <= m.top_degree; ++q) {
      std::vector<std::vector<IntegerVector>> table(m.rank(p),
                                                    std::vector<IntegerVector>(m.rank(q)));
      for (auto& row : table) {
        for (auto& e : row) {
          e.assign(m.rank(p + q), Integer(0));
          if (!e.empty()) e[0] = coeff(p, q);
        }
      }
      m.cup[{p, q}] = std::move(table);
    }
  }
}

void rank_one_wedges(GeometricModel& m) {
  for (int p = 0; p <= m.top_degree; ++p) {
    for (int q = 0; p + q <= m.top_degree; ++q) {
      std::vector<std::vector<RationalVector>> table(m.forms(p), std::vector<RationalVector>(m.forms(q)));
      for (auto& row : table) {
        for (auto& e : row) {
          e.assign(m.forms(p + q), Rational(0));
          if (!e.empty()) e[0] = 1;
        }
      }
      m.wedge[{p, q}] = std::move(table);
    }
  }
}

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

GeometricModel cp(int n) {
  if (n < 1) throw OutOfRange("cp(N) needs N >= 1");
  GeometricModel m;
  m.name = "cp" + std::to_string(n);
  m.top_degree = 2 * n;
  allocate(m);
  for (int k = 0; k <= n; ++k) {
    m.cochain_rank[std::size_t(2 * k)] = 1;
    m.form_dim[std::size_t(2 * k)] = 1;
    m.cochain_labels[std::size_t(2 * k)] = {power_label("alpha", k)};
    m.form_labels[std::size_t(2 * k)] = {power_label("t", k)};
  }
  fill_zero_maps(m);
  for (int k = 0; k <= n; ++k) m.j[std::size_t(2 * k)].set(0, 0, 1);
  rank_one_cups(m, [](int, int) { return Integer(1); });
  rank_one_wedges(m);
  validate_model(m);
  return m;
}

GeometricModel lens(int order, int n) {
  if (order < 2 || n < 1) throw OutOfRange("lens(n, N) needs n >= 2 and N >= 1");
  GeometricModel m;
  m.name = order == 2 ? "rp" + std::to_string(n) : "lens" + std::to_string(order) + "_" + std::to_string(n);
  m.top_degree = n;
  allocate(m);
  for (int k = 0; k <= n; ++k) {
    m.cochain_rank[std::size_t(k)] = 1;
    m.cochain_labels[std::size_t(k)] = {"e" + std::to_string(k)};
  }
  m.form_dim[0] = 1;
  m.form_labels[0] = {"1"};
  fill_zero_maps(m);
  for (int k = 1; k < n; k += 2) m.delta[std::size_t(k)](0, 0) = order;
  m.j[0].set(0, 0, 1);
  rank_one_cups(m, [](int p, int q) { return Integer(p % 2 != 0 && q % 2 != 0 ? 0 : 1); });
  rank_one_wedges(m);
  validate_model(m);
  return m;
}

GeometricModel rp(int n) { return lens(2, n); }

GeometricModel point() {
  GeometricModel m;
  m.name = "point";
  m.top_degree = 0;
  m.exact = true;
  allocate(m);
  m.cochain_rank[0] = 1;
  m.form_dim[0] = 1;
  m.cochain_labels[0] = {"1"};
  m.form_labels[0] = {"1"};
  fill_zero_maps(m);
  m.j[0].set(0, 0, 1);
  rank_one_cups(m, [](int, int) { return Integer(1); });
  rank_one_wedges(m);
  validate_model(m);
  return m;
}

GeometricModel model_by_name(const std::string& name) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) {
      throw OutOfRange("unknown model '" + name + "'");
    }
    return std::stoi(s);
  };
  if (name == "point") return point();
  if (name.rfind("cp", 0) == 0) return cp(number(name.substr(2)));
  if (name.rfind("rp", 0) == 0) return rp(number(name.substr(2)));
  if (name.rfind("lens", 0) == 0) {
    auto us = name.find('_');
    if (us == std::string::npos) throw OutOfRange("unknown model '" + name + "'");
    return lens(number(name.substr(4, us - 4)), number(name.substr(us + 1)));
  }
  throw OutOfRange("unknown model '" + name + "'");
}

}  // namespace builtin

}  // namespace eqdc
