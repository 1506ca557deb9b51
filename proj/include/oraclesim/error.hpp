#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oraclesim {

enum class ErrorCode {
  // lexical pipeline
  LexiconUnavailable,
  DuplicateId,
  MalformedInput,
  // urn protocol
  BadNonceLength,
  RngExhausted,
  // trust model
  NotWhitelisted,
  DuplicateIdentity,
  IdentityExpelled,
  FeeUnpaid,
  SourceExpelled,
  SourceInactive,
  WindowClosed,
  AlreadyResolved,
  TooFewReferences,
  UnknownQuery,
  DuplicateQuery,
  InvalidRequest,
  // simulator
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LexiconUnavailable: return "LexiconUnavailable";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::BadNonceLength: return "BadNonceLength";
    case ErrorCode::RngExhausted: return "RngExhausted";
    case ErrorCode::NotWhitelisted: return "NotWhitelisted";
    case ErrorCode::DuplicateIdentity: return "DuplicateIdentity";
    case ErrorCode::IdentityExpelled: return "IdentityExpelled";
    case ErrorCode::FeeUnpaid: return "FeeUnpaid";
    case ErrorCode::SourceExpelled: return "SourceExpelled";
    case ErrorCode::SourceInactive: return "SourceInactive";
    case ErrorCode::WindowClosed: return "WindowClosed";
    case ErrorCode::AlreadyResolved: return "AlreadyResolved";
    case ErrorCode::TooFewReferences: return "TooFewReferences";
    case ErrorCode::UnknownQuery: return "UnknownQuery";
    case ErrorCode::DuplicateQuery: return "DuplicateQuery";
    case ErrorCode::InvalidRequest: return "InvalidRequest";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace oraclesim
