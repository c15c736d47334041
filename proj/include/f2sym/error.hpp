#pragma once

#include <stdexcept>
#include <string>

namespace f2sym {

enum class ErrorKind {
  Lex,
  Parse,
  Unsupported,
  Analyze,
  Eval,
};

/// Base of every diagnostic raised by the translator. `line` is the 1-based
/// source line the problem was detected on, or 0 when no line applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, int line, const std::string& message)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

class LexError : public Error {
 public:
  LexError(int line, int column, const std::string& message)
      : Error(ErrorKind::Lex, line, message), column_(column) {}
  int column() const noexcept { return column_; }

 private:
  int column_;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string expected, std::string found)
      : Error(ErrorKind::Parse, line,
              "expected " + expected + ", found " + found),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

class UnsupportedError : public Error {
 public:
  UnsupportedError(int line, const std::string& message)
      : Error(ErrorKind::Unsupported, line, message) {}
};

class AnalyzeError : public Error {
 public:
  AnalyzeError(int line, const std::string& message)
      : Error(ErrorKind::Analyze, line, message) {}
};

class EvalError : public Error {
 public:
  EvalError(std::string statement, const std::string& reason)
      : Error(ErrorKind::Eval, 0, reason), statement_(std::move(statement)) {}

  const std::string& statement() const noexcept { return statement_; }

 private:
  std::string statement_;
};

}  // namespace f2sym
