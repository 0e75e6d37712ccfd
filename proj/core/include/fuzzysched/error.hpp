#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzysched {

/// Broad failure classes. The CLI maps each to a distinct exit code and
/// prints the category name so scripts can branch on it.
enum class ErrorKind {
  kOutOfRange,
  kDegenerateSet,
  kInfeasibleLoad,
  kConfigSyntax,
  kConfigSemantic,
  kIo,
  kInvariant,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax errors carry the 1-based location inside the source document.
class ConfigSyntaxError : public Error {
 public:
  ConfigSyntaxError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace fuzzysched
