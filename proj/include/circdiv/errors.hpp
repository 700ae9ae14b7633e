#ifndef CIRCDIV_ERRORS_HPP
#define CIRCDIV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circdiv {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// geometry
class CoincidentCurves : public Error {
 public:
  using Error::Error;
};
class DegenerateAngle : public Error {
 public:
  using Error::Error;
};
class DegenerateCurve : public Error {
 public:
  using Error::Error;
};
class BadIndex : public Error {
 public:
  using Error::Error;
};

// numeric domains
class DomainError : public Error {
 public:
  using Error::Error;
};
class UnsupportedN : public Error {
 public:
  using Error::Error;
};
class Overflow : public Error {
 public:
  using Error::Error;
};

// construction language
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};
class UnknownName : public Error {
 public:
  using Error::Error;
};
class DuplicateName : public Error {
 public:
  using Error::Error;
};
class WrongKind : public Error {
 public:
  using Error::Error;
};
class SelectorEmpty : public Error {
 public:
  using Error::Error;
};

class EmptyFigure : public Error {
 public:
  using Error::Error;
};

}  // namespace circdiv

#endif  // CIRCDIV_ERRORS_HPP
