// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vicyl {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or invalid vector/matrix dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operation requested outside its mathematically supported range
/// (e.g. generator enumeration of a non-polyhedral cone).
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

/// A set required to be nonempty/feasible turned out not to be.
class InfeasibleSetError : public Error {
 public:
  using Error::Error;
};

/// A problem map produced a non-finite value; the message carries the
/// offending evaluation point.
class MapEvaluationError : public Error {
 public:
  using Error::Error;
};

/// A base set degenerate for the requested construction.
class DegenerateBaseError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem description input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vicyl
