#pragma once

#include <stdexcept>
#include <string>

namespace modcartan {

/// Coarse classification used by the CLI to pick an exit code.
enum class ErrorKind {
  Usage,        // malformed input, unsupported request
  Computation,  // the algorithm could not decide (e.g. irreducibility undecided)
  Internal,     // an invariant that cannot fail did fail
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

#define MODCARTAN_DEFINE_ERROR(Name, Kind)                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what)                              \
        : Error(ErrorKind::Kind, #Name, what) {}                        \
  }

MODCARTAN_DEFINE_ERROR(InvalidArgument, Usage);
MODCARTAN_DEFINE_ERROR(NonSquare, Usage);
MODCARTAN_DEFINE_ERROR(ZeroPolynomial, Usage);
MODCARTAN_DEFINE_ERROR(DimensionMismatch, Usage);
MODCARTAN_DEFINE_ERROR(SpecSyntaxError, Usage);
MODCARTAN_DEFINE_ERROR(UnsupportedGroup, Usage);
MODCARTAN_DEFINE_ERROR(OrderLimitExceeded, Usage);
MODCARTAN_DEFINE_ERROR(NotNormal, Usage);
MODCARTAN_DEFINE_ERROR(ParentMismatch, Usage);
MODCARTAN_DEFINE_ERROR(NotApproxIdempotent, Usage);
MODCARTAN_DEFINE_ERROR(NotProjective, Usage);
MODCARTAN_DEFINE_ERROR(InvalidModule, Usage);
MODCARTAN_DEFINE_ERROR(SylowNotNormal, Usage);
MODCARTAN_DEFINE_ERROR(UnknownSuite, Usage);
MODCARTAN_DEFINE_ERROR(IncompatibleInput, Usage);
MODCARTAN_DEFINE_ERROR(ConfigError, Usage);
MODCARTAN_DEFINE_ERROR(IrreducibilityUndecided, Computation);
MODCARTAN_DEFINE_ERROR(InternalError, Internal);

#undef MODCARTAN_DEFINE_ERROR

/// A Cayley table failed one of the group axioms.
class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::string witness)
      : Error(ErrorKind::Usage, "NotAGroup",
              "not a group: " + axiom + " fails (" + witness + ")"),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

}  // namespace modcartan
