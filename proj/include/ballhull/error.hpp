#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ballhull {

enum class ErrorCode {
  InvalidInput,
  InvalidRadius,
  NotStrictlyConvex,
  CoincidentCenters,
  NoCommonDisc,
  DegenerateChord,
  NoArcs,
  RadiusTooSmall,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every precondition violation raised by the library.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ballhull
