#pragma once

#include <stdexcept>
#include <string>

namespace mroot {

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kZeroPolynomial,
  kDegree,
  kNotHomogeneous,
  kSingularTransform,
  kNonSquare,
  kDegenerateShift,
  kEmptyW,
  kParse,
  kGenericity,
  kSurjectivity,
  kRegularity,
  kCommutator,
  kSchur,
  kDegeneratePencil,
  kConsistency,
  kResource,
  kIo,
};

const char* to_string(ErrorKind kind);

// Process exit status used by the command line tool for each error kind:
// 2 parse, 3 genericity, 4 surjectivity/regularity, 5 resource, 1 otherwise.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mroot
