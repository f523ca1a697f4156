#ifndef SCROLL_CORE_ERRORS_HPP
#define SCROLL_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scroll {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: JSON, polynomial strings, option values.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a domain invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Mixing values that live in different ambient rings, or a quotient that
// is not finite-dimensional where one is required.
struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace scroll

#endif
