#pragma once

#include <stdexcept>
#include <string>

namespace charzero {

/// A configured resource cap (enumeration size, table order, class count, ...)
/// would be exceeded by the requested computation.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or JSON document; the message names the offending field.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.  Seeing this means a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace charzero
