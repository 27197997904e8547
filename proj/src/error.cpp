#include "plan2bt/error.hpp"

namespace plan2bt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnsupportedFeature: return "unsupported feature";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::UnknownPredicate: return "unknown predicate";
    case ErrorKind::UnknownAction: return "unknown action";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::UnsupportedRequirement: return "unsupported requirement";
    case ErrorKind::UnknownUnit: return "unknown action unit";
    case ErrorKind::UnknownNodeKind: return "unknown node kind";
    case ErrorKind::DanglingActionId: return "dangling action id";
    case ErrorKind::Deadlock: return "deadlock detected";
    case ErrorKind::Backend: return "backend error";
    case ErrorKind::EmptyTrace: return "empty trace";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

}  // namespace plan2bt
