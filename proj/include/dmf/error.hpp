#ifndef DMF_ERROR_HPP
#define DMF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dmf {

// Contract violation on inputs (bad prime, wrong degree, mixed fields, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& m) : std::invalid_argument(m) {}
};

// A requested coefficient or operation lies beyond the certified precision.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& m) : std::runtime_error(m) {}
};

// Partial inverse of the Frobenius twist is not defined on the input.
struct NotInImageError : std::domain_error {
  explicit NotInImageError(const std::string& m = "not in tau-image") : std::domain_error(m) {}
};

}  // namespace dmf

#endif
