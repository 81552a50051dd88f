#pragma once

#include <stdexcept>
#include <string>

namespace vscpt {

// Violated precondition or malformed input (CLI exit status 2).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical method failed to deliver its result (CLI exit status 3).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace vscpt
