#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qm {

enum class ErrorCode {
  InvalidParams,
  MalformedSpec,
  Overflow,
  NonPrimeNorm,
  PartitionFailure,
  MixedOrder,
  NotRational,
  NoIndependentUnit,
  UnknownResidue,
  InexactDivision,
  NegativeCoefficient,
  IntractableSize,
  EmptyCode,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace qm
