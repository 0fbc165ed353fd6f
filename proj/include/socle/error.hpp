#pragma once

#include <stdexcept>
#include <string>

namespace socle {

/// Base class for every error raised by the library. The CLI catches this
/// type and reports the failing stage.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Class name, e.g. "NotMultiplicative".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SOCLE_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                               \
   public:                                                                  \
    using Error::Error;                                                     \
    const char* kind() const noexcept override { return #Name; }            \
  }

// ffield
SOCLE_DEFINE_ERROR(DivisionByZero);
SOCLE_DEFINE_ERROR(FieldMismatch);
SOCLE_DEFINE_ERROR(DomainError);
SOCLE_DEFINE_ERROR(ReducibleModulus);

// pgroup
SOCLE_DEFINE_ERROR(InconsistentPresentation);
SOCLE_DEFINE_ERROR(RelationViolation);
SOCLE_DEFINE_ERROR(NotBijective);
SOCLE_DEFINE_ERROR(UnknownGroup);

// galgebra / linear algebra
SOCLE_DEFINE_ERROR(FiltrationError);
SOCLE_DEFINE_ERROR(SingularMatrix);

// jennings
SOCLE_DEFINE_ERROR(DimensionMismatch);

// autmod
SOCLE_DEFINE_ERROR(NotAUnit);
SOCLE_DEFINE_ERROR(SingularLinearPart);
SOCLE_DEFINE_ERROR(NotMultiplicative);
SOCLE_DEFINE_ERROR(NotInvertible);
SOCLE_DEFINE_ERROR(SocleNotPreserved);
SOCLE_DEFINE_ERROR(FiltrationNotPreserved);
SOCLE_DEFINE_ERROR(LieSubspaceViolated);

// truncsym
SOCLE_DEFINE_ERROR(NotScalarMultiple);

// text formats and configuration
SOCLE_DEFINE_ERROR(ParseError);
SOCLE_DEFINE_ERROR(ConfigError);

#undef SOCLE_DEFINE_ERROR

/// An error raised inside one stage of a verification run; keeps the kind of
/// the original error.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(stage + ": " + cause.kind() + ": " + cause.what()), stage_(std::move(stage)), cause_(cause.kind()) {}
  const char* kind() const noexcept override { return cause_.c_str(); }
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
  std::string cause_;
};

}  // namespace socle
