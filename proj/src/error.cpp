#include "qmcodes/error.hpp"

namespace qm {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::MalformedSpec: return "MalformedSpec";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::NonPrimeNorm: return "NonPrimeNorm";
  case ErrorCode::PartitionFailure: return "PartitionFailure";
  case ErrorCode::MixedOrder: return "MixedOrder";
  case ErrorCode::NotRational: return "NotRational";
  case ErrorCode::NoIndependentUnit: return "NoIndependentUnit";
  case ErrorCode::UnknownResidue: return "UnknownResidue";
  case ErrorCode::InexactDivision: return "InexactDivision";
  case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
  case ErrorCode::IntractableSize: return "IntractableSize";
  case ErrorCode::EmptyCode: return "EmptyCode";
  }
  return "Unknown";
}

} // namespace qm
