#include "hullvol/error.hpp"

namespace hullvol {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::ModelDomainViolation: return "ModelDomainViolation";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ConcyclicInput: return "ConcyclicInput";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyCloud: return "EmptyCloud";
    case ErrorKind::InsufficientLevels: return "InsufficientLevels";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::NonpositiveValue: return "NonpositiveValue";
    case ErrorKind::SampleBudgetTooSmall: return "SampleBudgetTooSmall";
    case ErrorKind::AuditFailure: return "AuditFailure";
    case ErrorKind::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorKind::NoValidQuad: return "NoValidQuad";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hullvol
