#include "tpca/error.hpp"

namespace tpca {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::NumericalFailure: return "NumericalFailure";
    case Errc::ZeroTensor: return "ZeroTensor";
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::IoError: return "IoError";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::TrailingBytes: return "TrailingBytes";
    case Errc::BadHeader: return "BadHeader";
    case Errc::InconsistentDims: return "InconsistentDims";
    case Errc::EmptySequence: return "EmptySequence";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tpca
