#pragma once

#include <stdexcept>
#include <string>

namespace bv {

/// An enumeration or table limit was hit. The message names the cap.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A floating-point result failed its integrality or orthogonality guard.
class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (group specs, certificates, tables). The message
/// names the offending token.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace bv
