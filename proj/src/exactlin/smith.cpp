#include "eqdc/exactlin/smith.hpp"

#include <utility>

#include "eqdc/error.hpp"

namespace eqdc {

namespace {

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += f * row_j
void add_row(IntegerMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
}

// col_i += f * col_j
void add_col(IntegerMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
}

void negate_row(IntegerMatrix& a, std::size_t i) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
}

struct Work {
  IntegerMatrix a, u, v;

  void rswap(std::size_t i, std::size_t j) {
    swap_rows(a, i, j);
    swap_rows(u, i, j);
  }
  void cswap(std::size_t i, std::size_t j) {
    swap_cols(a, i, j);
    swap_cols(v, i, j);
  }
  void radd(std::size_t i, std::size_t j, const Integer& f) {
    add_row(a, i, j, f);
    add_row(u, i, j, f);
  }
  void cadd(std::size_t i, std::size_t j, const Integer& f) {
    add_col(a, i, j, f);
    add_col(v, i, j, f);
  }
};

Integer quotient(const Integer& n, const Integer& d) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

std::size_t SmithForm::rank() const { return divisors().size(); }

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) {
    if (D(i, i) == 0) break;
    out.push_back(D(i, i));
  }
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Work w{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  IntegerMatrix& a = w.a;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // bring the smallest nonzero entry of the trailing block to (t, t)
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(pr, pc))) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) break;
      w.rswap(t, pr);
      w.cswap(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        w.radd(i, t, -quotient(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        w.cadd(j, t, -quotient(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            w.radd(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(w.u, t);
    }
  }
  return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = u.rows();
  if (n == 0) return IntegerMatrix(0, 0);
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, Rational(u(r, c)));
    aug.set(r, n + r, 1);
  }
  RowEchelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw NotIntegral("matrix is singular");
  }
  IntegerMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = e.rows[r][n + c];
      if (!is_integer(q)) throw NotIntegral("matrix is not unimodular");
      inv(r, c) = q.get_num();
    }
  }
  return inv;
}

std::optional<IntegerVector> solve_integer(const IntegerMatrix& m, const IntegerVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  SmithForm s = smith_normal_form(m);
  IntegerVector ub = s.U.apply(b);
  std::vector<Integer> d = s.divisors();
  IntegerVector y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < d.size()) {
      if (ub[i] % d[i] != 0) return std::nullopt;
      y[i] = ub[i] / d[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

}  // namespace eqdc
