#include "oreweave/error.hpp"

namespace oreweave {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(column == 0 ? "line " + std::to_string(line) + ": " + what
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what),
      line_(line),
      column_(column) {}

EncodingError::EncodingError(const std::string& what, std::size_t byte_offset)
    : Error("byte offset " + std::to_string(byte_offset) + ": " + what), byte_offset_(byte_offset) {}

}  // namespace oreweave
