#pragma once

#include <stdexcept>
#include <string>

namespace spanner {

enum class ErrorCode {
  invalid_argument,
  disconnected,
  not_subgraph,
  parse,
  io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::disconnected: return "DISCONNECTED";
    case ErrorCode::not_subgraph: return "NOT_SUBGRAPH";
    case ErrorCode::parse: return "PARSE";
    case ErrorCode::io: return "IO";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spanner
