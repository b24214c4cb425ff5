#ifndef CSR_ERRORS_HPP
#define CSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csr {

// Invalid graph construction input (out-of-range endpoint, loop).
struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 input.
struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A procedure was called outside the hypothesis it is defined for.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// A post-condition guaranteed by the underlying mathematics failed to hold.
// Seeing one of these means a bug in this library.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Enumeration order above the configured ceiling without an override.
struct CeilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace csr

#endif  // CSR_ERRORS_HPP
