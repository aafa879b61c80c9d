#ifndef HULLVOL_ERROR_HPP
#define HULLVOL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullvol {

enum class ErrorKind {
  DegenerateQuadruple,
  ModelDomainViolation,
  ParameterOutOfRange,
  ConcyclicInput,
  BudgetExceeded,
  EmptyCloud,
  InsufficientLevels,
  ResolutionTooCoarse,
  NonpositiveValue,
  SampleBudgetTooSmall,
  AuditFailure,
  DepthCapExceeded,
  NoValidQuad,
  CertificateFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hullvol

#endif  // HULLVOL_ERROR_HPP
