#pragma once

#include <random>

#include "eqdc/exactlin/matrix.hpp"

namespace eqdc::testing {

/// Small deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, long(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound = 5, long den_bound = 4) {
    Rational q(integer(-num_bound, num_bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }

  IntegerMatrix int_matrix(std::size_t rows, std::size_t cols, long bound) {
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer(-bound, bound);
    }
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace eqdc::testing
