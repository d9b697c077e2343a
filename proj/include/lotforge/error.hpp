#pragma once

#include <stdexcept>
#include <string>

namespace lotforge {

enum class ErrorCode {
  InvalidInstance,
  EntranceInvalid,
  SourceNotInGraph,
  DegeneratePolygon,
  CellSizeNonPositive,
  BackendUnavailable,
  ModelMalformed,
  NonIntegralAssignment,
  EntranceEqualsExit,
  FewerThanTwoEntrances,
  NoSeparatorExists,
  CutContainsHeavyArc,
  BudgetNonPositive,
  InstanceTooLarge,
  UnknownFormat,
  Internal,
};

const char* to_string(ErrorCode code);

class LotError : public std::runtime_error {
 public:
  LotError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lotforge
