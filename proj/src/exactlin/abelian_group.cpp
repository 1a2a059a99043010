#include "eqdc/exactlin/abelian_group.hpp"

#include <algorithm>

#include "eqdc/error.hpp"
#include "eqdc/exactlin/smith.hpp"

namespace eqdc {

std::string FGAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

FGAbelianGroup make_group(std::size_t free_rank, const std::vector<Integer>& orders) {
  IntegerMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  FGAbelianGroup g;
  g.free_rank = free_rank;
  std::size_t zeros = 0;
  for (const auto& d : smith_normal_form(diag).divisors()) {
    if (d > 1) g.torsion.push_back(d);
  }
  for (const auto& o : orders) zeros += o == 0 ? 1 : 0;
  g.free_rank += zeros;
  return g;
}

FGAbelianGroup cohomology_of_complex(const RationalMatrix& d_prev, const RationalMatrix& d_next,
                                     Ring ring) {
  if (d_prev.rows() != d_next.cols()) {
    throw DimensionMismatch("d_prev has " + std::to_string(d_prev.rows()) +
                            " rows but d_next has " + std::to_string(d_next.cols()) + " columns");
  }
  if (!(d_next * d_prev).is_zero()) throw CompositionNonzero("d_next * d_prev != 0");
  const std::size_t dim = d_prev.rows();
  const std::size_t r_next = rank(d_next);
  FGAbelianGroup g;
  if (ring == Ring::Q) {
    g.free_rank = dim - r_next - rank(d_prev);
    return g;
  }
  SmithForm s = smith_normal_form(d_prev.to_integer());
  std::vector<Integer> div = s.divisors();
  if (!d_next.is_integral()) throw NotIntegral("d_next has fractional entries");
  g.free_rank = dim - r_next - div.size();
  for (const auto& d : div) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace eqdc
