#include "fuzzysched/error.hpp"

#include <fmt/format.h>

namespace fuzzysched {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kDegenerateSet: return "degenerate-set";
    case ErrorKind::kInfeasibleLoad: return "infeasible-load";
    case ErrorKind::kConfigSyntax: return "config-syntax";
    case ErrorKind::kConfigSemantic: return "config-semantic";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kInvariant: return "internal-invariant";
  }
  return "unknown";
}

ConfigSyntaxError::ConfigSyntaxError(int line, int column,
                                     const std::string& message)
    : Error(ErrorKind::kConfigSyntax,
            fmt::format("line {}, column {}: {}", line, column, message)),
      line_(line),
      column_(column) {}

}  // namespace fuzzysched
