#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqdc/exactlin/rational.hpp"

namespace eqdc {

class IntegerMatrix;

/// Sparse exact rational matrix. Only nonzero entries are stored.
class RationalMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_dense(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);
  const std::map<Index, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_integral() const;

  std::vector<RationalVector> dense() const;
  RationalVector column(std::size_t c) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  IntegerMatrix to_integer() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, Rational> entries_;
};

/// Dense integer matrix with arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerVector apply(const IntegerVector& v) const;
  IntegerVector column(std::size_t c) const;
  RationalMatrix to_rational() const;
  bool is_zero() const;
  /// Exact determinant (Bareiss); square matrices only.
  Integer determinant() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Reduced row echelon form. `pivots` lists pivot columns in order.
struct RowEchelon {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column, with a 1 in that column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// A linearly independent subset of the columns spanning the column space.
std::vector<RationalVector> image_basis(const RationalMatrix& m);

/// Some x with m x = b, or nullopt if inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

bool is_zero(const RationalVector& v);
RationalVector scaled(const RationalVector& v, const Rational& s);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector to_rational(const IntegerVector& v);
/// Throws NotIntegral if some entry has a denominator.
IntegerVector to_integer(const RationalVector& v);

}  // namespace eqdc
