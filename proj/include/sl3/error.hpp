#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl3 {

enum class Errc {
  OutsideCoset,
  InvalidVertex,
  EmptyWindow,
  WindowTooSmall,
  NotSemisimpleCategory,
  NoKnownMap,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(Errc code) noexcept;

/// Every library failure is reported through this one exception type; the
/// code is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sl3
