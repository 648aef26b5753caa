#include "rspec/errors.hpp"

namespace rspec {

ParseError::ParseError(std::size_t line, const std::string& token)
    : Error("line " + std::to_string(line) + ": not a decimal number: '" + token + "'"),
      line_(line) {}

ValidationError::ValidationError(std::size_t index, const std::string& what)
    : Error("entry " + std::to_string(index) + ": " + what), index_(index) {}

EmptyInputError::EmptyInputError() : Error("zero table is empty") {}

}  // namespace rspec
