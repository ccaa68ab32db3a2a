#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Bad input that violates an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation is undefined at this input (e.g. a Cremona move whose
// fundamental points are collinear).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bounded search ran out of budget. Never means "does not exist".
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cremona

#include <functional>

namespace cremona {

// Raised when a long enumeration is stopped through its cancel hook.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("operation cancelled") {}
};

// Poll-able stop request. Long loops call it at least every 10^4 steps and
// throw Cancelled when it returns true.
using CancelCheck = std::function<bool()>;

inline constexpr long kCancelPollInterval = 4096;

}  // namespace cremona
