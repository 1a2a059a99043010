#pragma once

#include "eqdc/gstar/gstar.hpp"

namespace eqdc::builtin {

/// A G*-algebra over g + k carrying a k-connection.
struct ConnectionInstance {
  LieAlgebra g;
  LieAlgebra k;
  GStarAlgebra algebra;
  Connection theta;
};

/// G = K = circle acting on Lambda(lambda_M) with iota^g lambda_M =
/// iota^k lambda_M = 1 and Theta = lambda_M. Basis "xi_g", "xi_k".
ConnectionInstance rotation_instance();

/// W(k) with trivial g-action and Theta = theta_k. The basis of k gets the
/// suffix "_k" and its Weil generators are "theta.._k", "u.._k".
ConnectionInstance product_instance(const LieAlgebra& g, const LieAlgebra& k);

/// Lambda k* with its Maurer-Cartan connection and trivial g-action.
ConnectionInstance flat_instance(const LieAlgebra& g, const LieAlgebra& k);

}  // namespace eqdc::builtin
