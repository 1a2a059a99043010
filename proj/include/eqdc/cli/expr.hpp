#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqdc/gca/algebra.hpp"
#include "eqdc/liealg/polynomial.hpp"

namespace eqdc::cli {

/// Location of a piece of text; line and column are 1-based.
struct SourcePos {
  std::string source;
  int line = 1;
  int column = 1;

  SourcePos shifted(std::size_t offset) const { return {source, line, column + int(offset)}; }
  /// "source:line:col"
  std::string str() const;
};

/// Sums of signed products of rational literals, generator names, powers
/// name^k and parenthesized subexpressions. Throws SyntaxError or
/// UnknownGenerator with the position of the offending token.
Element parse_element(const std::string& text, const AlgebraPtr& algebra, const SourcePos& pos);

/// Same grammar over commuting variables `names`.
RationalPoly parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                              const SourcePos& pos);

/// Linear combination "2*a - 1/3*b^2 + 5" as (coefficient, label) pairs; a
/// bare number is the label "1" and is dropped when zero. Labels may carry a
/// "^k" suffix.
struct LabeledTerm {
  Rational coefficient;
  std::string label;
  SourcePos pos;              // the label
  SourcePos coefficient_pos;  // start of the term
};
std::vector<LabeledTerm> parse_combination(const std::string& text, const SourcePos& pos);

/// Inverse of parse_combination on a coefficient vector.
std::string format_combination(const RationalVector& v, const std::vector<std::string>& labels);

}  // namespace eqdc::cli
