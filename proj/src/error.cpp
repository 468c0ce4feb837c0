#include "etr/error.hpp"

namespace etr {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSummable: return "NotSummable";
    case ErrorKind::ComposeKeyMissing: return "ComposeKeyMissing";
    case ErrorKind::UnknownLiteral: return "UnknownLiteral";
    case ErrorKind::UnknownDomain: return "UnknownDomain";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::DuplicateLiteral: return "DuplicateLiteral";
    case ErrorKind::DuplicateDomain: return "DuplicateDomain";
    case ErrorKind::OverlappingDomains: return "OverlappingDomains";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::TupleNotSorted: return "TupleNotSorted";
    case ErrorKind::IncompatiblePattern: return "IncompatiblePattern";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::UnknownConstant: return "UnknownConstant";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MixedDomains: return "MixedDomains";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownDomainRef: return "UnknownDomainRef";
    case ErrorKind::DuplicateRelation: return "DuplicateRelation";
    case ErrorKind::UnknownRelation: return "UnknownRelation";
    case ErrorKind::UnknownRelationName: return "UnknownRelationName";
    case ErrorKind::HeaderMismatch: return "HeaderMismatch";
    case ErrorKind::ValueOutOfDomain: return "ValueOutOfDomain";
    case ErrorKind::NonIntegerDomain: return "NonIntegerDomain";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Error";
}

bool is_syntax_class(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::ParseError;
}

}  // namespace etr
