#pragma once

#include <stdexcept>
#include <string>

namespace dbruhat {

// Input that is well formed but outside the domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (words, coweights, labels that cannot be tokenized).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem-level identity the code asserts failed to hold. Never expected.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

}  // namespace dbruhat
