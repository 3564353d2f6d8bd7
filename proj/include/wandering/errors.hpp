#pragma once

#include <stdexcept>
#include <string>

namespace wandering {

/// Base class for every error raised by the library. The CLI maps any
/// Error that escapes a subcommand to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight or scalar was requested in a regime that cannot represent it
/// (e.g. a non-integer exponent in exact rational mode).
class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

/// A 3x3 system whose determinant is zero, or whose interval enclosure
/// contains zero.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Some E_i vanishes, so D_i = -G_i/E_i and the C-constants are undefined.
class DegenerateReduction : public Error {
 public:
  using Error::Error;
};

/// |C_1 Z_3 - C_3/2| vanishes (or cannot be separated from zero).
class DegenerateZ3 : public Error {
 public:
  using Error::Error;
};

/// Equality in Cauchy-Schwarz: |A_12|^2 == A_13 A_14.
class DegeneratePair : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

/// Zero d_i, Z_1 or A_15 passed to parameter recovery.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class RegisterTooLarge : public Error {
 public:
  RegisterTooLarge(const std::string& what, double max_modulus)
      : Error(what), max_modulus_(max_modulus) {}

  /// Estimated largest common |a_4| = |b_5| that keeps the strict
  /// inequality A_13 A_14 - |A_12|^2 < |A_15 A_12|.
  double max_modulus() const noexcept { return max_modulus_; }

 private:
  double max_modulus_;
};

class NoAdmissibleSystem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wandering
