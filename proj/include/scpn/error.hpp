#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scpn {

enum class ErrorCode {
  DuplicateId,
  DanglingEndpoint,
  UnknownThreat,
  UnknownPlace,
  InvalidValue,
  StateMismatch,
  IllegalAction,
  EmptyThreatSet,
  InvalidRadix,
  HorizonMismatch,
};

std::string_view to_string(ErrorCode code);

// Raised by model operations. `subject()` names the offending identifier
// (place id, threat id, connection label) when there is one.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorCode code, std::string subject, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace scpn
