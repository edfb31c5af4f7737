#pragma once

#include <stdexcept>
#include <string>

namespace opensets {

/// A caller-supplied oracle gave answers that no sound oracle could give.
struct OracleUnsound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of fuel where the API has no Exhausted value.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDisjoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptySet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace opensets
