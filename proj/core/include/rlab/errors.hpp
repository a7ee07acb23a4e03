#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The modulus failed the primality check (or is below the smallest supported prime).
class CompositeInput : public Error {
 public:
  using Error::Error;
};

/// A value exceeded the configured ceiling for exact arithmetic, or an exact
/// integer computation would leave the 64-bit range.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// Discrete logarithm of zero requested.
class ZeroHasNoIndex : public Error {
 public:
  using Error::Error;
};

/// Character or residue order that does not divide p-1, or lies outside (1, p-1).
class BadOrder : public Error {
 public:
  using Error::Error;
};

/// Two element sets over different universes were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked above its documented size ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// The factored polynomial is an m-th power, so the character-sum bound does not apply.
class IsMthPower : public Error {
 public:
  using Error::Error;
};

/// The claimed pair does not sum to the target residue set, or is trivial.
class NotADecomposition : public Error {
 public:
  using Error::Error;
};

/// An operation requiring nonempty sets received an empty one.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A real-valued parameter lies outside the mathematical domain of the formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlab
