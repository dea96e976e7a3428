#pragma once

#include <stdexcept>
#include <string>

namespace qcmod {

/// Invalid parameters: out-of-range indices, mismatched groups or fields.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A partial trace was asked for a value outside its domain.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input that should come from a genuine trace produces an
/// irrational or out-of-range correlation entry.
class NotATraceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON documents, game-family strings).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ModulusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qcmod
