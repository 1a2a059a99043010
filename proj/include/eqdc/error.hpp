#pragma once

#include <stdexcept>
#include <string>

namespace eqdc {

/// Base of every error raised by the library. `kind()` is a stable tag used in
/// reports and by the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define EQDC_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

EQDC_DEFINE_ERROR(CompositionNonzero);
EQDC_DEFINE_ERROR(DimensionMismatch);
EQDC_DEFINE_ERROR(NotIntegral);
EQDC_DEFINE_ERROR(CarrierMismatch);
EQDC_DEFINE_ERROR(NameCollision);
EQDC_DEFINE_ERROR(DegreeMismatch);
EQDC_DEFINE_ERROR(InfiniteBasis);
EQDC_DEFINE_ERROR(InvalidLieAlgebra);
EQDC_DEFINE_ERROR(NoRepresentation);
EQDC_DEFINE_ERROR(NotInvariant);
EQDC_DEFINE_ERROR(NotAConnection);
EQDC_DEFINE_ERROR(NoWeilFactor);
EQDC_DEFINE_ERROR(NotAHomomorphism);
EQDC_DEFINE_ERROR(NoNonzeroEvaluation);
EQDC_DEFINE_ERROR(ModelInvariantViolation);
EQDC_DEFINE_ERROR(GradingMismatch);
EQDC_DEFINE_ERROR(OutOfRange);
EQDC_DEFINE_ERROR(NotACocycle);
EQDC_DEFINE_ERROR(NeedsHomotopyData);
EQDC_DEFINE_ERROR(SyntaxError);
EQDC_DEFINE_ERROR(UnknownGenerator);

#undef EQDC_DEFINE_ERROR

}  // namespace eqdc
