#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace etr {

enum class ErrorKind {
  // core
  NotSummable,
  ComposeKeyMissing,
  UnknownLiteral,
  UnknownDomain,
  EmptyDomain,
  DuplicateLiteral,
  DuplicateDomain,
  OverlappingDomains,
  // relation
  SignatureMismatch,
  TupleNotSorted,
  IncompatiblePattern,
  NotBijective,
  // logic
  UnboundVariable,
  UnknownPredicate,
  UnknownConstant,
  ArityMismatch,
  SyntaxError,
  MixedDomains,
  // catalog
  ParseError,
  UnknownDomainRef,
  DuplicateRelation,
  UnknownRelation,
  UnknownRelationName,
  HeaderMismatch,
  ValueOutOfDomain,
  NonIntegerDomain,
  // cli
  OracleMismatch,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  Error(ErrorKind kind, std::string message, std::size_t position)
      : std::runtime_error(std::string(error_kind_name(kind)) + " at offset " +
                           std::to_string(position) + ": " + message),
        kind_(kind),
        position_(position) {}

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

// True for errors caused by malformed input text (as opposed to input that
// parses but fails type/arity/domain checks).
bool is_syntax_class(ErrorKind kind);

}  // namespace etr
