#pragma once

#include <stdexcept>
#include <string>

namespace herd {

// Invalid configuration (bad option values, incompatible parameter
// combinations). CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: missing or malformed files, dimension mismatches,
// state-space caps exceeded. CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. CLI maps this to exit code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace herd
