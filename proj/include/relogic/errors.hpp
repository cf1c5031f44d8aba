#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relogic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (regex, formula, monoid file). `position` is a byte
// offset into the input, or npos when it does not apply.
struct ParseError : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(const std::string& msg, std::size_t position = npos)
      : Error(position == npos ? msg : msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}

  std::size_t position;
};

// A configured hard limit was hit. Computations never degrade silently.
struct BudgetError : Error {
  using Error::Error;
};

// Semantically invalid argument (undeclared letter, unassigned variable, ...).
struct ValueError : Error {
  using Error::Error;
};

}  // namespace relogic
