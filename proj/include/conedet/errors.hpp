// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace conedet {

/// Base class for all conedet errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition (bad dimension, zero vector, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// An operation that assumes a proper cone (closed, pointed, full) was handed
/// a cone that is not.
class NotProperCone : public Error {
 public:
  explicit NotProperCone(const std::string& what) : Error(what) {}
};

/// A desk-scale enumeration budget was exceeded.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// A file or JSON document does not match the expected schema.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

/// A sampled computation has no admissible sample to work with.
class EmptySampleError : public Error {
 public:
  explicit EmptySampleError(const std::string& what) : Error(what) {}
};

/// The question is not decidable with the methods available at this scale.
class Undecidable : public Error {
 public:
  explicit Undecidable(const std::string& what) : Error(what) {}
};

}  // namespace conedet
