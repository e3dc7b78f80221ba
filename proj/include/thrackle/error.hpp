#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thrackle {

enum class ErrorCode {
  MalformedPermutation,
  Disconnected,
  InvalidDrawing,
  NotAThrackle,
  EdgesDontCrossHere,
  NotACycle,
  WalkNotInGraph,
  NoScaffold,
  TriangleNotEmpty,
  StaleTriangle,
  BudgetExceeded,
  WrongDegree,
  NotOnScaffold,
  EvenN,
  ResourceLimit,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thrackle
