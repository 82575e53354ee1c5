#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koszul {

enum class ErrorKind {
  Parse,
  Schema,
  Io,
  InvalidField,
  RelationEndpointMismatch,
  InhomogeneousRelation,
  NonCancellative,
  NotIndiscretelyBased,
  IdentityMorphism,
  UnknownObject,
  FaceNotInComplex,
  NotGraded,
  NotAPoset,
  NotAPartition,
  AxiomsNotVerified,
  LengthNotConstantOnClass,
  NotAFunctor,
  NotSurjectiveOnMorphisms,
  NotAlmostDiscrete,
  IllDefinedProduct,
  NotPointed,
  CapExceeded,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Input text could not be tokenized. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed document with a missing or mistyped field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& key, const std::string& message);

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace koszul
