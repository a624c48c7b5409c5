#pragma once

#include <stdexcept>
#include <string>

namespace mahon {

// Checked 64-bit arithmetic would wrap.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Operands live in Z[w] for different w (no implicit embedding between rings).
struct RingMismatchError : std::invalid_argument {
  explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed element text or serialized object.
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Value outside the domain of an operation (wrong family, bad color, odd
// negative count where an even one is required, and so on).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Identity id not present in the catalog.
struct UnknownIdentityError : std::invalid_argument {
  explicit UnknownIdentityError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters violate a catalog record's constraints (e.g. odd r for an
// identity that only holds for even r).
struct ConstraintError : std::invalid_argument {
  explicit ConstraintError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mahon
