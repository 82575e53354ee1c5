#include "koszul/errors.hpp"

namespace koszul {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::RelationEndpointMismatch: return "RelationEndpointMismatch";
    case ErrorKind::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorKind::NonCancellative: return "NonCancellative";
    case ErrorKind::NotIndiscretelyBased: return "NotIndiscretelyBased";
    case ErrorKind::IdentityMorphism: return "IdentityMorphism";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::AxiomsNotVerified: return "AxiomsNotVerified";
    case ErrorKind::LengthNotConstantOnClass: return "LengthNotConstantOnClass";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotSurjectiveOnMorphisms: return "NotSurjectiveOnMorphisms";
    case ErrorKind::NotAlmostDiscrete: return "NotAlmostDiscrete";
    case ErrorKind::IllDefinedProduct: return "IllDefinedProduct";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorKind::Parse, message + " at line " + std::to_string(line) + ", column " +
                                  std::to_string(column)),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(const std::string& key, const std::string& message)
    : Error(ErrorKind::Schema, "'" + key + "': " + message), key_(key) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace koszul
