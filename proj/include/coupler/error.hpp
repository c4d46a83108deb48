#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace coupler {

// All library failures throw Error (or a subclass). Anything else escaping
// the public API is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Problem in input text; carries the byte offset of the offending character.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace coupler
