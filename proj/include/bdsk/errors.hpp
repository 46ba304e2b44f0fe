#pragma once

#include <stdexcept>
#include <string>

namespace bdsk {

// Every failure raised by the library derives from Error so that the CLI can
// map it onto an exit code without string inspection.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two BooleanSets over different atom universes were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed system, graph, word or ideal.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration requested on a system above the atom cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// The boundary path space of a graph is infinite.
class InfiniteBoundaryError : public Error {
 public:
  using Error::Error;
};

// Input document does not match the schema. `where` names the offending
// field path (or line/column for syntax errors).
class SchemaError : public Error {
 public:
  SchemaError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A document refers to an atom, label or vertex it never declared.
class UndeclaredIdError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

// A dual map assigns two images to one atom.
class NonFunctionalMapError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

}  // namespace bdsk
