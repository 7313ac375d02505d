#ifndef LG2_ERRORS_HPP
#define LG2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lg2 {

/// Malformed input data: mismatched variable blocks, unknown names,
/// ill-formed product entries, degree-rule violations.
class StructuralError : public std::logic_error {
public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

/// A documented precondition of an operation was not met.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation could not certify its own result (box too small,
/// basis still growing, chart boundary, over-determined chase mismatch).
class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lg2

#endif
