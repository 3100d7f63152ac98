#ifndef AUTOSPEC_ERRORS_HPP
#define AUTOSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace autospec {

/// Base class for every failure raised by the library. `code()` is a stable
/// identifier that the CLI copies into its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define AUTOSPEC_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

AUTOSPEC_DEFINE_ERROR(DomainError);
AUTOSPEC_DEFINE_ERROR(PoleError);
AUTOSPEC_DEFINE_ERROR(IdentityError);
AUTOSPEC_DEFINE_ERROR(NumericallyAmbiguous);
AUTOSPEC_DEFINE_ERROR(WrongKind);
AUTOSPEC_DEFINE_ERROR(NotTranslation);
AUTOSPEC_DEFINE_ERROR(OrientationError);
AUTOSPEC_DEFINE_ERROR(ConjugacyFailure);
AUTOSPEC_DEFINE_ERROR(SingularResolvent);
AUTOSPEC_DEFINE_ERROR(PairingError);
AUTOSPEC_DEFINE_ERROR(ConvergenceError);
AUTOSPEC_DEFINE_ERROR(NoConvergence);
AUTOSPEC_DEFINE_ERROR(OverflowGuard);

#undef AUTOSPEC_DEFINE_ERROR

}  // namespace autospec

#endif  // AUTOSPEC_ERRORS_HPP
