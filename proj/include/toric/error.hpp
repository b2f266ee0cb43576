#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  Empty,
  LowDimensional,
  DimensionMismatch,
  NonPositiveDilation,
  NotSimple,
  UnknownFace,
  OutOfRange,
  InterpolationInconsistent,
  RouteMismatch,
  NegativeEntry,
  HodgeAsymmetric,
  EmptyPolytope,
  NonLatticeVertex,
  InputFormat,
};

std::string_view to_string(ErrorKind kind);

class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
