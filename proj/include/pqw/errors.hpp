#pragma once

#include <stdexcept>
#include <string>

namespace pqw {

// Invalid user-supplied data: bad group tables, generating vectors, spec files.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource budget was exhausted before an answer was certain.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void check_input(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace pqw
