#pragma once

#include <stdexcept>
#include <string>

namespace sparsecenter {

/// Bad arguments or flags: out-of-range k, unknown mode strings, oversized
/// oracle requests.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data: CSV parse failures, label problems,
/// empty classes, dimension mismatches, bad model files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical invariant that must hold by construction was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sparsecenter
