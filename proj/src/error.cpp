#include "netginv/error.hpp"

namespace netginv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NegativeConductance: return "NegativeConductance";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateConnection: return "DuplicateConnection";
    case ErrorCode::EmptyConnection: return "EmptyConnection";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularH1: return "SingularH1";
    case ErrorCode::SingularH2: return "SingularH2";
    case ErrorCode::SingularSchur: return "SingularSchur";
    case ErrorCode::NotKernelVector: return "NotKernelVector";
    case ErrorCode::KernelNotSimple: return "KernelNotSimple";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularH1:
    case ErrorCode::SingularH2:
    case ErrorCode::SingularSchur:
    case ErrorCode::NotKernelVector:
    case ErrorCode::KernelNotSimple:
    case ErrorCode::ZeroAlpha:
      return true;
    default:
      return false;
  }
}

}  // namespace netginv
