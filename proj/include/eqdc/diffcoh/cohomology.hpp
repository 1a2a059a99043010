#pragma once

#include <string>
#include <vector>

#include "eqdc/diffcoh/cochain.hpp"
#include "eqdc/exactlin/abelian_group.hpp"

namespace eqdc {

/// H^n(C*; Z) with explicit cocycle representatives.
struct IntegralCohomology {
  int degree = 0;
  FGAbelianGroup group;
  std::vector<IntegerVector> free_generators;
  std::vector<IntegerVector> torsion_generators;  // same order as group.torsion
};

/// Coordinates of a class: integers for the free part, residues for torsion.
struct IntegralClass {
  std::vector<Integer> free;
  std::vector<Integer> torsion;

  bool is_zero() const;
  friend bool operator==(const IntegralClass&, const IntegralClass&) = default;
};

IntegralCohomology integral_cohomology(const GeometricModel& m, int n);
/// Throws NotACocycle if delta c != 0.
IntegralClass classify(const GeometricModel& m, int n, const IntegerVector& c);

/// Structure of the differential cohomology group in degree n.
struct DiffCohomologyReport {
  int degree = 0;
  int certified_max = 0;
  // flat part H^{n-1}(C*; Q/Z) = (Q/Z)^divisible_rank + torsion
  std::size_t flat_divisible_rank = 0;
  std::vector<Integer> flat_torsion;
  std::vector<DiffCochain> flat_torsion_generators;
  /// (0, r v, 0) is a flat cocycle for every rational r and a coboundary iff r is an integer.
  std::vector<RationalVector> flat_directions;
  // curvature lattice Omega^n_Lambda
  std::vector<RationalVector> lattice_basis;
  std::size_t lattice_rational_rank = 0;  // forms whose image under j is exact over Q
  std::vector<DiffCochain> lattice_generators;
  // Z^rank + torsion + (Q/Z)^divisible + Q^rational
  std::size_t rank() const { return lattice_basis.size(); }
  std::vector<Integer> torsion() const { return flat_torsion; }

  /// "rank 1, torsion []", with divisible and rational parts appended when present.
  std::string summary() const;
};

/// Throws OutOfRange outside the certified range.
DiffCohomologyReport diff_cohomology(const GeometricModel& m, int n);

/// Class of c in H^n(C*; Z). Throws NotACocycle.
IntegralClass cc(const DiffCochain& x, const GeometricModel& m);
/// The curvature form. Throws NotACocycle.
RationalVector curv(const DiffCochain& x, const GeometricModel& m);

/// Cocycle (0, j(eta), d eta) of degree n attached to eta in Omega^{n-1}.
DiffCochain from_form(const RationalVector& eta, int n, const GeometricModel& m);

struct SesCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample when failed
};

struct SesReport {
  int degree = 0;
  std::vector<SesCheck> checks;
  bool ok() const;
};

/// Both short exact sequences and the square dR o curv = (x) Q o cc, checked
/// on generating sets.
SesReport verify_ses(const GeometricModel& m, int n);

}  // namespace eqdc
