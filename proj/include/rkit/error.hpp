#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rkit {

enum class Errc {
  InvalidLimit,
  OutOfRange,
  InvalidSequence,
  InvalidArgument,
  EmptyLevel,
  OracleTooLarge,
  IoError,
  CorruptCache,
  ParseError,
};

const char* to_string(Errc code) noexcept;

/// All library failures are reported through this exception type. `detail`
/// carries a code-specific number: the byte offset for CorruptCache, the
/// line number for ParseError, a suggested limit for OutOfRange (0 if none).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::uint64_t detail = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::uint64_t detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::uint64_t detail_;
};

}  // namespace rkit
