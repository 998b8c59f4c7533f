#include "nilrep/error.hpp"

namespace nilrep {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidArgument:
    return "InvalidArgument";
  case ErrorKind::Parse:
    return "ParseError";
  case ErrorKind::UnsupportedType:
    return "UnsupportedType";
  case ErrorKind::UnsupportedQuotient:
    return "UnsupportedQuotient";
  case ErrorKind::UnsupportedGroup:
    return "UnsupportedGroup";
  case ErrorKind::TooLarge:
    return "TooLarge";
  case ErrorKind::InexactDivision:
    return "InexactDivision";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string &message)
    : Error(ErrorKind::Parse, message), position_(position),
      expected_(std::move(expected)) {}

} // namespace nilrep
