#pragma once

#include <stdexcept>
#include <string>

namespace fockproj {

enum class ErrorCode {
  IndexOutOfRange,
  NotHermitian,
  EigenvalueOutOfRange,
  DimensionTooSmall,
  RankExceedsDimension,
  NonConfiningPotential,
  InvalidDensity,
  NotAProjector,
  InvalidSpec,
  UnknownLabel,
  NonIncreasingTimes,
  TruncationBound,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code distinguishes failure kinds
/// so front ends can map them (e.g. to process exit codes).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fockproj
