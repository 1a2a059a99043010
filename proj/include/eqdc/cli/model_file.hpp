#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqdc/cli/expr.hpp"
#include "eqdc/diffcoh/model.hpp"
#include "eqdc/gstar/gstar.hpp"

namespace eqdc::cli {

/// Parsed model file. Every section is optional. The raw markers (`*_builtin`,
/// `weil`, `generators`) are kept so the file can be printed back; the other
/// fields are the validated objects built from them.
struct ModelFile {
  std::string source;

  // [lie]
  std::optional<std::string> lie_builtin;
  std::optional<LieAlgebra> lie;
  /// Nonzero when lie = g + k with g spanned by the first `split` basis vectors.
  std::size_t split = 0;

  // [algebra]
  bool weil = false;
  std::vector<Generator> generators;
  /// The algebra on `generators` over `lie`; without `weil` it is also `gstar`.
  std::optional<GStarAlgebra> explicit_algebra;
  /// The algebra tasks run on: W(lie) (x) explicit_algebra when `weil` is set.
  std::optional<GStarAlgebra> gstar;

  // [connection], components in gstar's carrier
  std::optional<std::vector<Element>> connection;

  // [model]
  std::optional<std::string> model_builtin;
  std::optional<GeometricModel> model;

  // [task]
  std::map<std::string, std::string> task;

  /// First `split` basis vectors (all of lie without a split).
  LieAlgebra g() const;
  /// The remaining ones; throws OutOfRange without a split.
  LieAlgebra k() const;
  /// The connection over k at offset split (over lie at 0 without a split).
  Connection connection_data() const;
};

/// Throws SyntaxError, UnknownGenerator or DegreeMismatch carrying
/// "source:line:col", InvalidLieAlgebra and ModelInvariantViolation for
/// well-formed input that violates an axiom, OutOfRange for unknown builtins.
ModelFile parse_model_text(const std::string& text, const std::string& source);
/// Throws SyntaxError if the file cannot be read.
ModelFile parse_model(const std::string& path);

/// Canonical text. `expand` writes builtin Lie algebras and models out in full.
std::string print_model(const ModelFile& f, bool expand = false);

/// Equality of the built objects (markers and source ignored).
bool same_model(const ModelFile& a, const ModelFile& b);
bool same_geometric_model(const GeometricModel& a, const GeometricModel& b);

/// Sub-Lie-algebra on basis slots [begin, end). Throws InvalidLieAlgebra if
/// the slots are not closed under the bracket.
LieAlgebra lie_slice(const LieAlgebra& lie, std::size_t begin, std::size_t end, const std::string& name);

}  // namespace eqdc::cli
