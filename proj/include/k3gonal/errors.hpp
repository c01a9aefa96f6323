#pragma once

#include <stdexcept>
#include <string>

namespace k3g {

/// Inputs outside an operation's domain (exit code 1 at the CLI).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two routes to the same quantity disagreed; always a bug (exit code 2).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace k3g
