#include "basket/errors.hpp"

namespace basket {

namespace {

std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

IngestError::IngestError(const std::string& message, std::size_t line)
    : Error(with_line(message, line)), line_(line) {}

}  // namespace basket
