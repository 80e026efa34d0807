#pragma once

#include <stdexcept>
#include <string>

namespace tailrisk {

/// Bad input data: malformed catalog rows, empty or degenerate tails,
/// exclusion rules that cannot be applied. CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure: a fit that did not converge, a bootstrap whose
/// replicates all failed. CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailrisk
