#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilrep {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  UnsupportedType,
  UnsupportedQuotient,
  UnsupportedGroup,
  TooLarge,
  InexactDivision,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. The kind is stable and
/// is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string &message);

  /// Byte offset into the input where parsing stopped.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

} // namespace nilrep
