#pragma once

#include <stdexcept>
#include <string>

namespace symu {

// Raised when a configured resource bound is hit (coset cap, product order
// cap, oracle order threshold). Distinct from invalid input so the CLI can
// map it to its own exit code.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or semantic error in presentation text, with source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

}  // namespace symu
