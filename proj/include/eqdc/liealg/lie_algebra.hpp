#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqdc/exactlin/matrix.hpp"
#include "eqdc/exactlin/rational.hpp"

namespace eqdc {

using GaussMatrix = std::vector<std::vector<GaussRational>>;

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix operator-(const GaussMatrix& a, const GaussMatrix& b);

/// Finite-dimensional Lie algebra over Q: [xi_b, xi_c] = sum_a c^a_bc xi_a.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  std::optional<std::size_t> find(const std::string& basis_name) const;

  /// c^a_bc, all indices zero-based.
  const Rational& structure(std::size_t a, std::size_t b, std::size_t c) const {
    return c_[(a * dim() + b) * dim() + c];
  }
  void set_structure(std::size_t a, std::size_t b, std::size_t c, const Rational& v);
  /// Sets [xi_b, xi_c] = value and [xi_c, xi_b] = -value.
  void set_bracket(std::size_t b, std::size_t c, const RationalVector& value);

  bool is_abelian() const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  const std::optional<std::vector<GaussMatrix>>& rep() const { return rep_; }
  void set_rep(std::vector<GaussMatrix> matrices);
  std::size_t rep_size() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name_ == b.name_ && a.basis_ == b.basis_ && a.c_ == b.c_ && a.rep_ == b.rep_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Rational> c_;
  std::optional<std::vector<GaussMatrix>> rep_;
};

struct LieViolation {
  std::string relation;  // "antisymmetry", "jacobi", "representation"
  std::vector<std::size_t> indices;  // one-based, as (a, b, c) or (a, b)
  std::string detail;
};

struct LieReport {
  std::vector<LieViolation> violations;
  bool ok() const { return violations.empty(); }
};

LieReport validate_lie(const LieAlgebra& g);
/// Throws InvalidLieAlgebra listing the first violation.
void require_valid(const LieAlgebra& g);

/// Matrix of ad*_{xi_a} on g* in the dual basis: ad*_a(lambda^e) = -sum_c c^e_ac lambda^c,
/// stored so that column e holds the image of lambda^e.
std::vector<RationalMatrix> coadjoint_matrices(const LieAlgebra& g);
/// Matrix of ad_{xi_a}: column c holds [xi_a, xi_c].
std::vector<RationalMatrix> adjoint_matrices(const LieAlgebra& g);

/// g + k with brackets between the summands zero. Representations are dropped
/// unless both are present (block-diagonal sum).
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& k, const std::string& name);

/// Returns a copy with new name and basis names (same structure).
LieAlgebra renamed(const LieAlgebra& g, const std::string& name,
                   const std::vector<std::string>& basis);

namespace builtin {
LieAlgebra u1();
LieAlgebra r2();
LieAlgebra su2();
LieAlgebra u2();
LieAlgebra heis3();
/// Looks up one of the names above. Throws OutOfRange for unknown names.
LieAlgebra lie_by_name(const std::string& name);
}  // namespace builtin

}  // namespace eqdc
