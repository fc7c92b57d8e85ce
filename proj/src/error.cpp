#include "unilat/error.hpp"

namespace unilat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UnknownElementInCover: return "UnknownElementInCover";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::TooManyElements: return "TooManyElements";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::CarrierNotInterval: return "CarrierNotInterval";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAUninorm: return "NotAUninorm";
    case ErrorCode::NotATnorm: return "NotATnorm";
    case ErrorCode::NotATconorm: return "NotATconorm";
    case ErrorCode::NotAClosure: return "NotAClosure";
    case ErrorCode::NotAnInterior: return "NotAnInterior";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::PartsDoNotCover: return "PartsDoNotCover";
    case ErrorCode::InvalidRequest: return "InvalidRequest";
    case ErrorCode::NoConsistentLattice: return "NoConsistentLattice";
    case ErrorCode::AmbiguousLattice: return "AmbiguousLattice";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::UnknownConstruction: return "UnknownConstruction";
    case ErrorCode::Parse: return "Parse";
  }
  return "Error";
}

}  // namespace unilat
