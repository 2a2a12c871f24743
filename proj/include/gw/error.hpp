#pragma once

#include <stdexcept>
#include <string>

namespace gw {

enum class ErrorKind {
  Parameter,           // malformed or out-of-range input
  Unsupported,         // the oracle cannot reduce this query shape
  HypothesisViolated,  // positivity / V >= l style hypotheses fail
  Inapplicable,        // a closed form or theorem does not apply
  Precondition,        // caller broke an operation precondition
  Internal             // an invariant that must hold did not
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::Inapplicable: return "inapplicable";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}
  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gw
