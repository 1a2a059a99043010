#include "eqdc/exactlin/matrix.hpp"

#include <algorithm>
#include <string>

#include "eqdc/error.hpp"

namespace eqdc {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (const auto& v : row) set(r, c++, v);
    ++r;
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns,
                                            std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void RationalMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionMismatch("index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (value == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = value;
  }
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  set(r, c, at(r, c) + value);
}

bool RationalMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return is_integer(e.second); });
}

std::vector<RationalVector> RationalMatrix::dense() const {
  std::vector<RationalVector> out(rows_, RationalVector(cols_));
  for (const auto& [idx, v] : entries_) out[idx.first][idx.second] = v;
  return out;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (const auto& [idx, v] : entries_) {
    if (idx.second == c) out[idx.first] = v;
  }
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match columns");
  RationalVector out(rows_);
  for (const auto& [idx, x] : entries_) out[idx.first] += x * v[idx.second];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (const auto& [idx, v] : entries_) t.entries_[{idx.second, idx.first}] = v;
  return t;
}

IntegerMatrix RationalMatrix::to_integer() const {
  IntegerMatrix m(rows_, cols_);
  for (const auto& [idx, v] : entries_) {
    if (!is_integer(v)) throw NotIntegral("entry " + to_string(v) + " is not an integer");
    m(idx.first, idx.second) = v.get_num();
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> b_rows;
  for (const auto& [idx, v] : b.entries_) b_rows[idx.first].emplace_back(idx.second, v);
  for (const auto& [idx, v] : a.entries_) {
    auto it = b_rows.find(idx.second);
    if (it == b_rows.end()) continue;
    for (const auto& [c, w] : it->second) out.add_to(idx.first, c, v * w);
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sum shape mismatch");
  RationalMatrix out = a;
  for (const auto& [idx, v] : b.entries_) out.add_to(idx.first, idx.second, v);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("difference shape mismatch");
  RationalMatrix out = a;
  for (const auto& [idx, v] : b.entries_) out.add_to(idx.first, idx.second, -v);
  return out;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  data_.resize(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerVector IntegerMatrix::apply(const IntegerVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match columns");
  IntegerVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix IntegerMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, Rational((*this)(r, c)));
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RowEchelon row_echelon(const RationalMatrix& m) {
  RowEchelon out;
  auto rows = m.dense();
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t piv = lead;
    while (piv < nrows && rows[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[lead]);
    Rational inv = 1 / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[lead][c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> image_basis(const RationalMatrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<RationalVector> out;
  for (auto p : e.pivots) out.push_back(m.column(p));
  return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (const auto& [idx, v] : m.entries()) aug.set(idx.first, idx.second, v);
  for (std::size_t r = 0; r < b.size(); ++r) aug.set(r, m.cols(), b[r]);
  RowEchelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][m.cols()];
  return x;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  RationalVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
  RationalVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

IntegerVector to_integer(const RationalVector& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integer(q)) throw NotIntegral(to_string(q) + " is not an integer");
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace eqdc
