#pragma once

#include <stdexcept>
#include <string>

namespace plan2bt {

enum class ErrorKind {
  Syntax,
  UnsupportedFeature,
  TypeMismatch,
  UnknownPredicate,
  UnknownAction,
  ArityMismatch,
  UnsupportedRequirement,  // planning-graph step 6 failure
  UnknownUnit,
  UnknownNodeKind,
  DanglingActionId,
  Deadlock,
  Backend,
  EmptyTrace,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}
  Error(ErrorKind kind, std::string message, int line, int column)
      : std::runtime_error(std::string(to_string(kind)) + " at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace plan2bt
