#include "scpn/error.hpp"

namespace scpn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::UnknownThreat: return "UnknownThreat";
    case ErrorCode::UnknownPlace: return "UnknownPlace";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::IllegalAction: return "IllegalAction";
    case ErrorCode::EmptyThreatSet: return "EmptyThreatSet";
    case ErrorCode::InvalidRadix: return "InvalidRadix";
    case ErrorCode::HorizonMismatch: return "HorizonMismatch";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& subject, const std::string& detail) {
  std::string msg{to_string(code)};
  if (!subject.empty()) msg += "(" + subject + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ModelError::ModelError(ErrorCode code, std::string subject, const std::string& detail)
    : std::runtime_error(compose(code, subject, detail)), code_(code), subject_(std::move(subject)) {}

}  // namespace scpn
