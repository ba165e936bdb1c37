#pragma once

#include <stdexcept>
#include <string>

namespace malleq {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in one of the text formats; `where` is a 0-based offset
// into the parsed text.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t where)
      : Error(msg + " (at offset " + std::to_string(where) + ")"), offset(where) {}
  std::size_t offset;
};

// A rule application whose premises do not fit the rule.
struct ProofError : Error {
  using Error::Error;
};

// A brute-force helper was asked to enumerate past its configured limit.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace malleq
