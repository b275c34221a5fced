#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

/// Raised when an argument falls outside the domain where a formula is valid
/// (gamma poles, out-of-range k, x >= 1 for 2F1, mismatched Fock spaces).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace su11
