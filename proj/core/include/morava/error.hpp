#pragma once

#include <stdexcept>
#include <string>

namespace morava {

// Thrown when a request exceeds a configured resource bound (enumeration
// sizes, group orders, exponent magnitudes).  Distinct from std::domain_error,
// which marks inputs that are wrong rather than merely too large.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace morava
