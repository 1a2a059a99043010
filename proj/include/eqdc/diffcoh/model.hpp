#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdc/exactlin/matrix.hpp"

namespace eqdc {

/// Finite cochain model of EG x_G M with integral cochains C^n, a rational
/// forms complex Omega^n_G and an injective chain map j: Omega^n -> C^n (x) Q.
/// Coefficients are Lambda = Z inside V = Q.
struct GeometricModel {
  std::string name;
  int top_degree = 0;  // C^n = 0 above this degree
  /// True when the model is C*(BG) itself (no truncation); otherwise degrees
  /// n <= top_degree - 1 are certified.
  bool exact = false;

  std::vector<std::size_t> cochain_rank;   // index n = 0..top_degree
  std::vector<IntegerMatrix> delta;        // delta[n]: C^n -> C^{n+1}
  std::vector<std::vector<std::string>> cochain_labels;

  std::vector<std::size_t> form_dim;       // index n = 0..top_degree
  std::vector<RationalMatrix> d_forms;     // d[n]: Omega^n -> Omega^{n+1}
  std::vector<std::vector<std::string>> form_labels;
  std::vector<RationalMatrix> j;           // j[n]: Omega^n -> C^n (x) Q

  /// cup[{p, q}][a][b] = e^p_a cup e^q_b in C^{p+q}. Only recorded pairs exist.
  std::map<std::pair<int, int>, std::vector<std::vector<IntegerVector>>> cup;
  /// wedge[{p, q}][a][b] = w^p_a w^q_b in Omega^{p+q}.
  std::map<std::pair<int, int>, std::vector<std::vector<RationalVector>>> wedge;

  std::size_t rank(int n) const;
  std::size_t forms(int n) const;
  /// delta on C^n; the zero map outside the range.
  IntegerMatrix delta_at(int n) const;
  RationalMatrix d_forms_at(int n) const;
  RationalMatrix j_at(int n) const;
  /// Largest degree for which Omega and C agree with the untruncated objects.
  int certified_max() const;
  /// Throws OutOfRange outside 0..certified_max().
  void require_certified(int n) const;

  bool has_cup(int p, int q) const { return cup.count({p, q}) != 0; }
  RationalVector cup_product(int p, const RationalVector& a, int q, const RationalVector& b) const;
  RationalVector wedge_product(int p, const RationalVector& a, int q, const RationalVector& b) const;
  /// j(a wedge b) = j(a) cup j(b) on all recorded pairs, so the homotopy B can be taken 0.
  bool j_multiplicative = false;
};

/// Checks delta^2 = 0, d^2 = 0, j injective per degree, j d = delta j, the
/// Leibniz rule for recorded cups and multiplicativity of j. Sets
/// j_multiplicative. Throws ModelInvariantViolation naming the failed check.
void validate_model(GeometricModel& m);

namespace builtin {
/// CP^N as the 2N-skeleton of BS^1: C^{2k} = Z alpha^k, Omega^{2k} = Q t^k, j(t^k) = alpha^k.
GeometricModel cp(int n);
/// Lens space L^N(n) as the N-skeleton of BZ/n: C^k = Z e^k, delta e^{2i+1} = n e^{2i+2}.
GeometricModel lens(int order, int n);
GeometricModel rp(int n);
/// Trivial group acting on a point.
GeometricModel point();
/// "cp8", "rp9", "lens3_7", "point".
GeometricModel model_by_name(const std::string& name);
}  // namespace builtin

}  // namespace eqdc
