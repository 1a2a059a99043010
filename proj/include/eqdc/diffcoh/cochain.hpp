#pragma once

#include <string>

#include "eqdc/diffcoh/model.hpp"

namespace eqdc {

/// Hopkins-Singer triple (c, h, omega) of degree k in CG(q): c in C^k(Z),
/// h in C^{k-1}(Q), omega in Omega^k (zero when k < q).
struct DiffCochain {
  int degree = 0;
  int q = 0;
  IntegerVector c;
  RationalVector h;
  RationalVector omega;

  friend bool operator==(const DiffCochain&, const DiffCochain&) = default;
};

/// Throws GradingMismatch if the vector sizes do not fit the model or omega is
/// nonzero below the cut q.
void require_grading(const GeometricModel& m, const DiffCochain& x);

DiffCochain zero_cochain(const GeometricModel& m, int degree, int q);
/// (1, 0, 1) in degree 0 with q = 0.
DiffCochain unit_cochain(const GeometricModel& m);

DiffCochain operator+(const DiffCochain& a, const DiffCochain& b);
DiffCochain operator-(const DiffCochain& a, const DiffCochain& b);
DiffCochain operator*(const Integer& n, const DiffCochain& a);

/// d(c, h, omega) = (delta c, j(omega) - c - delta h, d omega).
DiffCochain differential(const DiffCochain& x, const GeometricModel& m);
bool is_cocycle(const DiffCochain& x, const GeometricModel& m);

/// For a cocycle with q = degree: x = d(y) for some y of degree - 1 (whose
/// curvature is forced to vanish). Throws NotACocycle, GradingMismatch.
bool is_coboundary(const DiffCochain& x, const GeometricModel& m);

/// Canonical cohomologous representative: h is reduced modulo integral
/// cochains and rational coboundaries, c follows. Idempotent.
DiffCochain normalize(const DiffCochain& x, const GeometricModel& m);

/// (c1 c2, (-1)^|c1| c1 h2 + h1 j(w2) + B(w1, w2), w1 w2) with B = 0.
/// B = 0 is forced when w1 = 0 or w2 = 0 and valid when j is multiplicative;
/// otherwise throws NeedsHomotopyData.
DiffCochain product(const DiffCochain& a, const DiffCochain& b, const GeometricModel& m);

/// "(alpha^2, 1/2*alpha, t)"-style rendering using the model's labels.
std::string to_string(const DiffCochain& x, const GeometricModel& m);

}  // namespace eqdc
