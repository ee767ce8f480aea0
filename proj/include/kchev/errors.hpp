#pragma once

#include <stdexcept>
#include <string>

namespace kchev {

// Base class for all kchev errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cartan matrix fails a structural or finite-type check.
class InvalidCartan : public Error {
 public:
  using Error::Error;
};

// Named Cartan type with a rank outside the valid range (e.g. G3).
class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// A word passed where a reduced decomposition is required.
class NotReduced : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

// Full-group enumeration would exceed the configured bound.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured size cap (e.g. word length for cell tables).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace kchev
