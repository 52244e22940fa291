#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motifcover {

// Bad input data: malformed files, invalid graphs, inconsistent covers.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-numbered failure while reading a text input.
struct ParseError : ValidationError {
  ParseError(const std::string& what, std::size_t line)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// A generation spec that cannot be realized (count exceeds placements,
// density above one, rejection budget exhausted, ...).
struct InfeasibleSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace motifcover
