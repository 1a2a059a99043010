#include <functional>

#include "doctest.h"
#include "eqdc/error.hpp"
#include "eqdc/exactlin/abelian_group.hpp"
#include "eqdc/exactlin/matrix.hpp"
#include "eqdc/exactlin/smith.hpp"
#include "unit/random_gen.hpp"

using namespace eqdc;

namespace {

// Oracle: gcd of all k x k minors of a small matrix (determinantal divisors).
Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
    if (i == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) {
      rs[i] = r;
      pick_rows(i + 1, r + 1);
    }
  };
  pick_cols = [&](std::size_t i, std::size_t from) {
    if (i == k) {
      IntegerMatrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
      Integer det = sub.determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) {
      cs[i] = c;
      pick_cols(i + 1, c + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace

TEST_CASE("kernel of the zero 1x1 matrix is everything") {
  auto k = kernel_basis(RationalMatrix{{0}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalVector{1});
}

TEST_CASE("kernel of an injective map is empty") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST_CASE("kernel of [[1,1],[2,2]]") {
  auto k = kernel_basis(RationalMatrix{{1, 1}, {2, 2}});
  REQUIRE(k.size() == 1);
  // hand row reduction: x + y = 0, free variable y = 1
  CHECK(k[0] == RationalVector{-1, 1});
  CHECK(is_zero(RationalMatrix({{1, 1}, {2, 2}}).apply(k[0])));
}

TEST_CASE("kernel vectors are annihilated and independent on random matrices") {
  testing::Gen gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + gen.index(4), c = 1 + gen.index(5);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (gen.coin()) m.set(i, j, gen.rational());
    auto k = kernel_basis(m);
    CHECK(k.size() + rank(m) == c);
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    CHECK(rank(RationalMatrix::from_columns(k, c)) == k.size());
    CHECK(image_basis(m).size() == rank(m));
  }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
  RationalMatrix m{{1, 2}, {2, 4}};
  auto x = solve(m, {3, 6});
  REQUIRE(x);
  CHECK(m.apply(*x) == RationalVector{3, 6});
  CHECK_FALSE(solve(m, {1, 0}));
}

TEST_CASE("determinant") {
  CHECK(IntegerMatrix{{2, 1}, {7, 4}}.determinant() == 1);
  CHECK(IntegerMatrix{{0, 1}, {1, 0}}.determinant() == -1);
  CHECK(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}.determinant() == 0);
  CHECK(IntegerMatrix{{0, 2, 1}, {3, 0, 0}, {1, 1, 1}}.determinant() == -3);
}

TEST_CASE("smith normal form of [[2]]") {
  auto s = smith_normal_form(IntegerMatrix{{2}});
  CHECK(s.D == IntegerMatrix{{2}});
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
  IntegerMatrix m{{2, 4}, {6, 8}};
  auto s = smith_normal_form(m);
  CHECK(s.D == IntegerMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * m * s.V == s.D);
  // determinantal divisor oracle: d1 = gcd of entries, d1 d2 = |det|
  CHECK(minor_gcd(m, 1) == 2);
  CHECK(minor_gcd(m, 2) == 8);
}

TEST_CASE("RP^2 boundary 2 gives Z/2") {
  auto s = smith_normal_form(IntegerMatrix{{2}});
  CHECK(s.divisors() == std::vector<Integer>{2});
  FGAbelianGroup h1 = cohomology_of_complex(RationalMatrix(1, 1), RationalMatrix{{2}}, Ring::Z);
  // H_1(RP^2) = coker(2) at C_1 with d_1 = 0 out of it
  FGAbelianGroup h = cohomology_of_complex(RationalMatrix{{2}}, RationalMatrix{{0}}, Ring::Z);
  CHECK(h.to_string() == "Z/2");
  CHECK(h1.is_zero());
}

TEST_CASE("smith normal form properties on random matrices") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + gen.index(4), c = 1 + gen.index(4);
    IntegerMatrix m = gen.int_matrix(r, c, 9);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    auto d = s.divisors();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j || i >= d.size()) CHECK(s.D(i, j) == 0);
    Integer prod = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] > 0);
      if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
      prod *= d[i];
      CHECK(prod == minor_gcd(m, i + 1));
    }
    CHECK(d.size() == rank(m.to_rational()));
  }
}

TEST_CASE("unimodular inverse and integer solve") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix m = gen.int_matrix(3, 3, 6);
    auto s = smith_normal_form(m);
    CHECK(unimodular_inverse(s.U) * s.U == IntegerMatrix::identity(3));
    IntegerVector x{gen.integer(-5, 5), gen.integer(-5, 5), gen.integer(-5, 5)};
    IntegerVector b = m.apply(x);
    auto y = solve_integer(m, b);
    REQUIRE(y);
    CHECK(m.apply(*y) == b);
  }
  CHECK_FALSE(solve_integer(IntegerMatrix{{2}}, {1}));
  CHECK(solve_integer(IntegerMatrix{{2}}, {4}) == IntegerVector{2});
}

TEST_CASE("cohomology over Q of zero maps in dimension 1") {
  auto g = cohomology_of_complex(RationalMatrix(1, 0), RationalMatrix(0, 1), Ring::Q);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion.empty());
}

TEST_CASE("RP^9 cellular cochains: degree 2 is Z/2, full table") {
  const int n = 9;
  auto delta = [&](int k) {
    // delta^k : C^k -> C^{k+1}
    std::size_t src = (k >= 0 && k <= n) ? 1 : 0;
    std::size_t dst = (k + 1 >= 0 && k + 1 <= n) ? 1 : 0;
    RationalMatrix m(dst, src);
    if (src && dst && k % 2 == 1) m.set(0, 0, 2);
    return m;
  };
  CHECK(cohomology_of_complex(delta(1), delta(2), Ring::Z).to_string() == "Z/2");
  std::vector<std::string> expected{"Z", "0", "Z/2", "0", "Z/2", "0", "Z/2", "0", "Z/2", "Z"};
  for (int k = 0; k <= n; ++k) {
    CHECK(cohomology_of_complex(delta(k - 1), delta(k), Ring::Z).to_string() == expected[k]);
  }
}

TEST_CASE("CP^4 cellular cochains: degree 3 vanishes") {
  // C^3 = 0 in the even-cell complex
  CHECK(cohomology_of_complex(RationalMatrix(0, 1), RationalMatrix(1, 0), Ring::Z).is_zero());
  CHECK(cohomology_of_complex(RationalMatrix(1, 0), RationalMatrix(0, 1), Ring::Z).to_string() ==
        "Z");
}

TEST_CASE("exact pairs have zero rational cohomology") {
  testing::Gen gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t a = 1 + gen.index(3), b = 1 + gen.index(3);
    RationalMatrix f(b, a);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) f.set(i, j, gen.rational());
    // C^0 -> C^1 -> C^2 with second map the projection onto coker f: exact at C^1
    auto im = image_basis(f);
    auto cok = kernel_basis(RationalMatrix::from_columns(im, b).transpose());
    RationalMatrix g = RationalMatrix::from_columns(cok, b).transpose();
    if (cok.empty()) g = RationalMatrix(0, b);
    CHECK(cohomology_of_complex(f, g, Ring::Q).free_rank == 0);
  }
}

TEST_CASE("composition check") {
  CHECK_THROWS_AS(cohomology_of_complex(RationalMatrix{{1}}, RationalMatrix{{1}}, Ring::Q),
                  CompositionNonzero);
}

TEST_CASE("make_group normalizes to a divisibility chain") {
  auto g = make_group(0, {2, 3, 1, 0});
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<Integer>{6});
  CHECK(make_group(0, {2, 4}).to_string() == "Z/2 + Z/4");
}

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK(fractional_part(Rational(-1, 3)) == Rational(2, 3));
  CHECK(to_string(parse_gauss("-1/2i")) == "-1/2i");
  CHECK(parse_gauss("1-i") == GaussRational(1, -1));
  CHECK(parse_gauss("i") == GaussRational(0, 1));
}
